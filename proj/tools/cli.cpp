#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tutte/graph_io.hpp"
#include "tutte/invariants.hpp"
#include "tutte/schreier.hpp"
#include "tutte/tutte.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tutte;

std::optional<std::string> cache_dir_env() {
    const char* dir = std::getenv("TUTTE_CACHE_DIR");
    if (dir != nullptr && *dir != '\0') return std::string(dir);
    return std::nullopt;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot open output file: " + path);
    file << content;
}

Group need_group(const std::string& name) {
    const auto g = group_from_name(name);
    if (!g) throw Error("unknown group: " + name);
    return *g;
}

std::string spectrum_string(const std::map<std::size_t, std::size_t>& spectrum) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [len, count] : spectrum) {
        if (!first) os << "; ";
        first = false;
        os << len << ":" << count;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string group;
    unsigned level = 1;
    bool strip_loops = false;
    std::string format = "edges";
    std::string output;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
    const Group g = need_group(a.group);
    MultiGraph graph = schreier_graph(g, a.level);
    if (a.strip_loops) graph = graph.strip_loops();

    std::string content;
    if (a.format == "edges") {
        content = to_edge_text(graph);
    } else if (a.format == "text") {
        content = graph.canonical_text();
    } else if (a.format == "dot") {
        content = to_dot(graph);
    } else {  // json
        ordered_json j;
        j["group"] = group_name(g);
        j["level"] = a.level;
        j["loopless"] = a.strip_loops;
        j["vertices"] = graph.vertex_count();
        if (!graph.vertex_labels().empty()) j["vertex_labels"] = graph.vertex_labels();
        ordered_json edges = ordered_json::array();
        for (const Edge& e : graph.edges()) {
            edges.push_back(ordered_json::array({e.u, e.v, e.label}));
        }
        j["edges"] = std::move(edges);
        content = j.dump(2) + "\n";
    }
    write_output(a.output, content, out);
    return 0;
}

// ---------------------------------------------------------------------------
// tutte
// ---------------------------------------------------------------------------

struct TutteArgs {
    std::string group;
    unsigned level = 0;
    std::string input;
    bool strip_loops = false;
    std::string method = "auto";
    std::string format = "text";
    std::string output;
};

int run_tutte(const TutteArgs& a, std::ostream& out) {
    const auto parsed_method = method_from_name(a.method);
    if (!parsed_method) throw Error("unknown method: " + a.method);
    const TutteMethod method = *parsed_method;

    BiPoly t;
    if (!a.input.empty()) {
        MultiGraph graph = [&] {
            if (a.input == "-") return parse_edge_text(std::cin);
            std::ifstream file(a.input);
            if (!file) throw Error("cannot open input file: " + a.input);
            return parse_edge_text(file);
        }();
        if (a.strip_loops) graph = graph.strip_loops();
        t = tutte_polynomial(graph, method);
    } else {
        const Group g = need_group(a.group);
        const auto cache = cache_dir_env();
        if (cache && (method == TutteMethod::Auto || method == TutteMethod::CactusProduct)) {
            t = tutte_of_level(g, a.level, !a.strip_loops, cache);
        } else {
            MultiGraph graph = schreier_graph(g, a.level);
            if (a.strip_loops) graph = graph.strip_loops();
            t = tutte_polynomial(graph, method);
        }
    }

    PolyFormat format = PolyFormat::Text;
    if (a.format == "json") format = PolyFormat::Json;
    if (a.format == "latex") format = PolyFormat::Latex;
    // Stream term by term: high-level polynomials run to millions of terms,
    // so never materialize the whole rendering in memory.
    if (a.output.empty()) {
        write_bipoly(out, t, format);
        out << "\n";
    } else {
        std::ofstream file(a.output);
        if (!file) throw Error("cannot open output file: " + a.output);
        write_bipoly(file, t, format);
        file << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string group;
    unsigned level = 1;
    std::string what = "all";
    std::string format = "json";
    std::string output;
};

std::string render_single(const std::string& key, const std::string& value,
                          const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j[key] = value;
        return j.dump(2) + "\n";
    }
    if (format == "csv") return "quantity,value\n" + key + "," + value + "\n";
    return value + "\n";  // latex: the value itself is already renderable
}

int run_eval(const EvalArgs& a, std::ostream& out) {
    const Group g = need_group(a.group);
    const auto cache = cache_dir_env();
    const bool latex = (a.format == "latex");

    if (a.what == "complexity" || a.what == "connected" || a.what == "forests") {
        const BiPoly t = tutte_of_level(g, a.level, true, cache);
        BigInt value;
        std::string key;
        if (a.what == "complexity") {
            value = t.eval_int(1, 1);
            key = "tau";
        } else if (a.what == "connected") {
            value = t.eval_int(1, 2);
            key = "connected_spanning";
        } else {
            value = t.eval_int(2, 1);
            key = "forests";
        }
        write_output(a.output, render_single(key, value.get_str(), a.format), out);
        return 0;
    }
    if (a.what == "acyclic") {
        const BiPoly t = tutte_of_level(g, a.level, false, cache);
        write_output(a.output,
                     render_single("acyclic_orientations", t.eval_int(2, 0).get_str(), a.format),
                     out);
        return 0;
    }
    if (a.what == "chromatic") {
        const BiPoly t = tutte_of_level(g, a.level, false, cache);
        const GraphStats stats = schreier_graph(g, a.level).strip_loops().stats();
        const UniPoly chi = chromatic_polynomial(t, stats);
        write_output(a.output,
                     render_single("chromatic", chi.to_string(latex ? "\\lambda" : "lambda", latex),
                                   a.format),
                     out);
        return 0;
    }
    if (a.what == "reliability") {
        const BiPoly t = tutte_of_level(g, a.level, true, cache);
        const GraphStats stats = schreier_graph(g, a.level).stats();
        const UniPoly rel = reliability_polynomial(t, stats);
        write_output(a.output, render_single("reliability", rel.to_string("p", latex), a.format),
                     out);
        return 0;
    }
    if (a.what == "ising") {
        LaurentPoly z;
        if (a.level <= 8) {
            const BiPoly t = tutte_of_level(g, a.level, false, cache);
            z = ising_from_tutte(t, schreier_graph(g, a.level).strip_loops().stats());
        } else {
            const auto reduced = reduce(ising_closed_fraction(g, a.level));
            if (!reduced) throw Error("closed-form partition function failed to reduce");
            z = *reduced;
        }
        write_output(a.output, render_single("ising", z.to_string("t", latex), a.format), out);
        return 0;
    }

    // what == "all": the full per-level report.
    const EvaluationReport rep = evaluation_report(g, a.level, cache);
    const StructureProfile profile = predicted_structure(g, a.level);

    if (a.format == "json") {
        ordered_json j;
        j["group"] = group_name(g);
        j["level"] = a.level;
        j["structure"] = {{"vertices", rep.stats.vertices}, {"edges", rep.stats.edges},
                          {"loops", rep.stats.loops},       {"bridges", profile.bridges},
                          {"rank", rep.stats.rank},         {"nullity", rep.stats.nullity}};
        ordered_json spectrum = ordered_json::object();
        for (const auto& [len, count] : profile.cycle_length_counts) {
            spectrum[std::to_string(len)] = count;
        }
        j["structure"]["cycle_spectrum"] = std::move(spectrum);
        j["values"] = {{"tau", rep.values.tau.get_str()},
                       {"connected_spanning", rep.values.connected_spanning.get_str()},
                       {"forests", rep.values.forests.get_str()},
                       {"two_pow_edges", rep.values.two_pow_edges.get_str()},
                       {"acyclic_orientations", rep.values.acyclic.get_str()},
                       {"acyclic_note", rep.values.acyclic_note},
                       {"chromatic", rep.chromatic.to_string("lambda")},
                       {"reliability", rep.reliability.to_string("p")}};
        j["growth"] = {{"ratio", rep.growth.ratio.get_str()},
                       {"target", rep.growth.target.get_str()},
                       {"gap", rep.growth.gap.get_str()},
                       {"ratio_decimal", rep.growth.ratio_double}};
        ordered_json checks = ordered_json::array();
        for (const CheckLine& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
        }
        j["checks"] = std::move(checks);
        j["all_pass"] = rep.all_pass;
        write_output(a.output, j.dump(2) + "\n", out);
        return rep.all_pass ? 0 : 2;
    }

    if (a.format == "csv") {
        std::ostringstream os;
        os << "kind,name,value\n";
        os << "value,tau," << rep.values.tau << "\n";
        os << "value,connected_spanning," << rep.values.connected_spanning << "\n";
        os << "value,forests," << rep.values.forests << "\n";
        os << "value,two_pow_edges," << rep.values.two_pow_edges << "\n";
        os << "value,acyclic_orientations," << rep.values.acyclic << "\n";
        os << "value,ratio," << rep.growth.ratio.get_str() << "\n";
        os << "value,gap," << rep.growth.gap.get_str() << "\n";
        for (const CheckLine& c : rep.checks) os << "check," << c.name << "," << c.status << "\n";
        write_output(a.output, os.str(), out);
        return rep.all_pass ? 0 : 2;
    }

    // latex
    std::ostringstream os;
    os << "\\begin{tabular}{ll}\n\\hline\n";
    os << "level & " << a.level << " \\\\\n";
    os << "$\\tau$ & " << rep.values.tau << " \\\\\n";
    os << "connected spanning & " << rep.values.connected_spanning << " \\\\\n";
    os << "forests & " << rep.values.forests << " \\\\\n";
    os << "acyclic orientations & " << rep.values.acyclic << " \\\\\n";
    os << "$\\chi$ & $" << rep.chromatic.to_string("\\lambda", true) << "$ \\\\\n";
    os << "$R$ & $" << rep.reliability.to_string("p", true) << "$ \\\\\n";
    os << "ratio & $" << rep.growth.ratio.get_str() << "$ \\\\\n\\hline\n";
    os << "\\end{tabular}\n";
    write_output(a.output, os.str(), out);
    return rep.all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string group;  // empty = both
    unsigned max_level = 6;
    unsigned max_ising_level = 8;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Group> groups;
    if (a.group.empty()) {
        groups = {Group::Grigorchuk, Group::Basilica};
    } else {
        groups = {need_group(a.group)};
    }

    for (Group g : groups) {
        for (unsigned n = 1; n <= a.max_level; ++n) {
            const EvaluationReport rep = evaluation_report(g, n, std::nullopt, a.max_ising_level);
            std::size_t passed = 0, skipped = 0;
            for (const CheckLine& c : rep.checks) {
                if (c.status == "pass") ++passed;
                if (c.status == "skip") ++skipped;
            }
            if (!rep.all_pass) {
                for (const CheckLine& c : rep.checks) {
                    if (c.status == "fail") {
                        err << group_name(g) << " level " << n << " FAILED " << c.name
                            << (c.detail.empty() ? "" : (": " + c.detail)) << "\n";
                    }
                }
                return 2;
            }

            const MultiGraph graph = schreier_graph(g, n);
            const BiPoly reference = tutte_cactus(graph);
            std::vector<std::string> engines = {"cactus"};
            try {
                const BiPoly sum = tutte_spanning_sum(graph);
                if (const auto diff = first_difference(reference, sum)) {
                    err << group_name(g) << " level " << n
                        << " FAILED cactus vs spanning-sum: " << *diff << "\n";
                    return 2;
                }
                engines.push_back("sum");
            } catch (const GuardError&) {
            }
            try {
                const BiPoly dc = tutte_deletion_contraction(graph);
                if (const auto diff = first_difference(reference, dc)) {
                    err << group_name(g) << " level " << n
                        << " FAILED cactus vs deletion-contraction: " << *diff << "\n";
                    return 2;
                }
                engines.push_back("dc");
            } catch (const GuardError&) {
            }

            out << group_name(g) << " level " << n << ": ok (" << passed << " checks passed, "
                << skipped << " skipped; engines:";
            for (const std::string& e : engines) out << " " << e;
            out << ")\n";
        }
    }
    out << "all levels verified\n";
    return 0;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

struct ReportArgs {
    std::string group;  // empty = both
    unsigned max_level = 10;
    std::string format = "csv";
    std::string output;
};

int run_report(const ReportArgs& a, std::ostream& out) {
    std::vector<Group> groups;
    if (a.group.empty()) {
        groups = {Group::Grigorchuk, Group::Basilica};
    } else {
        groups = {need_group(a.group)};
    }

    std::ostringstream os;
    const bool latex = (a.format == "latex");
    if (latex) {
        os << "\\begin{tabular}{llrrrrlrrr}\n\\hline\n"
           << "group & level & vertices & edges & loops & bridges & cycles & "
              "$\\log_2\\tau$ & ratio & gap \\\\\n\\hline\n";
    } else {
        os << "group,level,vertices,edges,loops,bridges,cycle_spectrum,tau_exponent,ratio,gap,"
              "gap_decimal\n";
    }
    for (Group g : groups) {
        for (unsigned n = 1; n <= a.max_level; ++n) {
            const StructureProfile profile = predicted_structure(g, n);
            const GrowthPoint growth = asymptotic_growth(g, n);
            const unsigned long exponent = tau_exponent(g, n);
            if (latex) {
                os << group_name(g) << " & " << n << " & " << profile.vertices << " & "
                   << profile.edges << " & " << profile.loops << " & " << profile.bridges << " & "
                   << spectrum_string(profile.cycle_length_counts) << " & " << exponent << " & $"
                   << growth.ratio.get_str() << "$ & $" << growth.gap.get_str() << "$ \\\\\n";
            } else {
                std::ostringstream gap_dec;
                gap_dec << std::setprecision(8) << growth.gap.get_d();
                os << group_name(g) << "," << n << "," << profile.vertices << "," << profile.edges
                   << "," << profile.loops << "," << profile.bridges << ","
                   << spectrum_string(profile.cycle_length_counts) << "," << exponent << ","
                   << growth.ratio.get_str() << "," << growth.gap.get_str() << ","
                   << gap_dec.str() << "\n";
            }
        }
        if (latex && g != groups.back()) os << "\\hline\n";
    }
    if (latex) os << "\\hline\n\\end{tabular}\n";
    write_output(a.output, os.str(), out);
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schreier graphs of self-similar groups and their exact Tutte polynomials"};
    app.set_version_flag("--version", "1.0.0");
    app.require_subcommand(1);

    const std::vector<std::string> group_names = {"grigorchuk", "basilica"};

    GenerateArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("generate", "Emit a level-n action graph");
    gen_cmd->add_option("--group", gen.group, "Group family")
        ->required()
        ->check(CLI::IsMember(group_names));
    gen_cmd->add_option("--level", gen.level, "Level n >= 1")
        ->required()
        ->check(CLI::Range(1u, 20u));
    gen_cmd->add_flag("--strip-loops", gen.strip_loops, "Drop loop edges");
    gen_cmd->add_option("--format", gen.format, "edges|text|dot|json (default edges)")
        ->check(CLI::IsMember({"edges", "text", "dot", "json"}));
    gen_cmd->add_option("--output,-o", gen.output, "Write to a file instead of stdout");

    TutteArgs tut;
    CLI::App* tut_cmd = app.add_subcommand("tutte", "Compute a Tutte polynomial exactly");
    tut_cmd->add_option("--group", tut.group, "Group family")->check(CLI::IsMember(group_names));
    tut_cmd->add_option("--level", tut.level, "Level n >= 1")->check(CLI::Range(1u, 12u));
    tut_cmd->add_option("--input,-i", tut.input, "Edge-list file ('-' for stdin)");
    tut_cmd->add_flag("--strip-loops", tut.strip_loops, "Drop loop edges first");
    tut_cmd->add_option("--method", tut.method, "auto|sum|dc|cactus (default auto)")
        ->check(CLI::IsMember({"auto", "sum", "dc", "cactus", "spanning-sum",
                               "deletion-contraction", "cactus-product"}));
    tut_cmd->add_option("--format", tut.format, "text|json|latex (default text)")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    tut_cmd->add_option("--output,-o", tut.output, "Write to a file instead of stdout");

    EvalArgs ev;
    CLI::App* ev_cmd = app.add_subcommand("eval", "Evaluate graph invariants at a level");
    ev_cmd->add_option("--group", ev.group, "Group family")
        ->required()
        ->check(CLI::IsMember(group_names));
    ev_cmd->add_option("--level", ev.level, "Level n >= 1")
        ->required()
        ->check(CLI::Range(1u, 12u));
    ev_cmd->add_option("--what", ev.what,
                       "complexity|connected|forests|acyclic|chromatic|reliability|ising|all")
        ->check(CLI::IsMember({"complexity", "connected", "forests", "acyclic", "chromatic",
                               "reliability", "ising", "all"}));
    ev_cmd->add_option("--format", ev.format, "json|latex|csv (default json)")
        ->check(CLI::IsMember({"json", "latex", "csv"}));
    ev_cmd->add_option("--output,-o", ev.output, "Write to a file instead of stdout");

    VerifyArgs ver;
    CLI::App* ver_cmd =
        app.add_subcommand("verify", "Re-derive every identity from scratch and cross-check");
    ver_cmd->add_option("--group", ver.group, "Group family (default: both)")
        ->check(CLI::IsMember(group_names));
    ver_cmd->add_option("--max-level", ver.max_level, "Verify levels 1..N (default 6)")
        ->check(CLI::Range(1u, 10u));
    ver_cmd->add_option("--max-ising-level", ver.max_ising_level,
                        "Cap for the symbolic Ising check (default 8)")
        ->check(CLI::Range(1u, 10u));

    ReportArgs rep;
    CLI::App* rep_cmd = app.add_subcommand("report", "Structure and growth table across levels");
    rep_cmd->add_option("--group", rep.group, "Group family (default: both)")
        ->check(CLI::IsMember(group_names));
    rep_cmd->add_option("--max-level", rep.max_level, "Levels 1..N (default 10)")
        ->check(CLI::Range(1u, 16u));
    rep_cmd->add_option("--format", rep.format, "csv|latex (default csv)")
        ->check(CLI::IsMember({"csv", "latex"}));
    rep_cmd->add_option("--output,-o", rep.output, "Write to a file instead of stdout");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("schreier-tutte");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (std::string& s : full) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;  // help/version exit 0, bad usage 1
    }

    try {
        if (tut_cmd->parsed()) {
            if (tut.input.empty() && tut.group.empty()) {
                throw Error("tutte: provide either --input or --group/--level");
            }
            if (!tut.input.empty() && !tut.group.empty()) {
                throw Error("tutte: --input and --group are mutually exclusive");
            }
            if (tut.input.empty() && tut.level == 0) {
                throw Error("tutte: --group requires --level");
            }
        }
        if (gen_cmd->parsed()) return run_generate(gen, out);
        if (tut_cmd->parsed()) return run_tutte(tut, out);
        if (ev_cmd->parsed()) return run_eval(ev, out);
        if (ver_cmd->parsed()) return run_verify(ver, out, err);
        if (rep_cmd->parsed()) return run_report(rep, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
