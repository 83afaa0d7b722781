#include "tutte/schreier.hpp"

#include <cassert>
#include <sstream>

namespace tutte {

std::string group_name(Group g) {
    return g == Group::Grigorchuk ? "grigorchuk" : "basilica";
}

std::optional<Group> group_from_name(const std::string& name) {
    if (name == "grigorchuk") return Group::Grigorchuk;
    if (name == "basilica") return Group::Basilica;
    return std::nullopt;
}

const GroupSpec& group_spec(Group g) {
    // Grigorchuk: a swaps the first letter; b = (a, c), c = (a, d), d = (1, b).
    static const GroupSpec grigorchuk = [] {
        GroupSpec s;
        s.group = Group::Grigorchuk;
        s.generators = {
            {"a", true, {-1, -1}},
            {"b", false, {0, 2}},
            {"c", false, {0, 3}},
            {"d", false, {-1, 1}},
        };
        s.involutive_edges = true;
        return s;
    }();
    // Basilica: a = (b, 1) without flip, b = (a, 1) with flip.
    static const GroupSpec basilica = [] {
        GroupSpec s;
        s.group = Group::Basilica;
        s.generators = {
            {"a", false, {1, -1}},
            {"b", true, {0, -1}},
        };
        s.involutive_edges = false;
        return s;
    }();
    return g == Group::Grigorchuk ? grigorchuk : basilica;
}

std::uint64_t apply_generator(const GroupSpec& spec, std::size_t gen_index, std::uint64_t word,
                              unsigned level) {
    assert(gen_index < spec.generators.size());
    std::uint64_t result = word;
    int gen = static_cast<int>(gen_index);
    for (unsigned pos = 0; pos < level && gen >= 0; ++pos) {
        const GeneratorAction& act = spec.generators[static_cast<std::size_t>(gen)];
        const unsigned letter = (word >> pos) & 1ULL;
        if (act.flip) result ^= (1ULL << pos);
        gen = act.restriction[letter];
    }
    return result;
}

std::string word_label(std::uint64_t word, unsigned level) {
    std::string s(level, '0');
    for (unsigned pos = 0; pos < level; ++pos) {
        if ((word >> pos) & 1ULL) s[pos] = '1';
    }
    return s;
}

MultiGraph schreier_graph(Group g, unsigned level, const SchreierOptions& options) {
    if (level == 0) throw GuardError("schreier_graph: level must be >= 1");
    if (level > options.max_level) {
        throw GuardError("schreier_graph: level " + std::to_string(level) +
                         " exceeds the cap of " + std::to_string(options.max_level));
    }
    const GroupSpec& spec = group_spec(g);
    const std::uint64_t n = 1ULL << level;

    MultiGraph graph(n);
    for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
        const std::string& label = spec.generators[gi].name;
        for (std::uint64_t w = 0; w < n; ++w) {
            const std::uint64_t img = apply_generator(spec, gi, w, level);
            if (spec.involutive_edges) {
                // One edge per orbit pair, one loop per fixed point.
                if (img == w) {
                    graph.add_edge(static_cast<VertexId>(w), static_cast<VertexId>(w), label);
                } else if (w < img) {
                    graph.add_edge(static_cast<VertexId>(w), static_cast<VertexId>(img), label);
                }
            } else {
                graph.add_edge(static_cast<VertexId>(w), static_cast<VertexId>(img), label);
            }
        }
    }
    if (options.vertex_labels) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::uint64_t w = 0; w < n; ++w) labels.push_back(word_label(w, level));
        graph.set_vertex_labels(std::move(labels));
    }
    return graph;
}

StructureProfile predicted_structure(Group g, unsigned level) {
    StructureProfile p;
    const std::size_t half = level >= 1 ? (std::size_t{1} << (level - 1)) : 0;
    p.vertices = std::size_t{1} << level;

    if (g == Group::Grigorchuk) {
        p.edges = 5 * half + 2;
        p.loops = (std::size_t{1} << level) + 4;
        p.bridges = half;
        if (half >= 2) p.cycle_length_counts[2] = half - 1;
        p.max_cycle_length = half >= 2 ? 2 : 0;
        return p;
    }

    // Basilica. Levels 1-3 are recorded from direct enumeration of the
    // action; the parity formulas below start at level 4.
    p.edges = std::size_t{1} << (level + 1);
    p.bridges = 0;
    switch (level) {
        case 1:
            p.loops = 2;
            p.cycle_length_counts = {{2, 1}};
            break;
        case 2:
            p.loops = 2;
            p.cycle_length_counts = {{2, 3}};
            break;
        case 3:
            p.loops = 4;
            p.cycle_length_counts = {{2, 4}, {4, 1}};
            break;
        default: {
            p.loops = half;
            if (level % 2 == 0) {
                // 3 * 2^{n-2i-1} cycles of length 2^i for 1 <= i < n/2,
                // plus 3 of length 2^{n/2}.
                for (unsigned i = 1; i < level / 2; ++i) {
                    p.cycle_length_counts[std::size_t{1} << i] =
                        3 * (std::size_t{1} << (level - 2 * i - 1));
                }
                p.cycle_length_counts[std::size_t{1} << (level / 2)] = 3;
            } else {
                // 3 * 2^{n-2i-1} of length 2^i for 1 <= i < (n-1)/2, plus 4
                // of length 2^{(n-1)/2} and one of length 2^{(n+1)/2}.
                for (unsigned i = 1; i < (level - 1) / 2; ++i) {
                    p.cycle_length_counts[std::size_t{1} << i] =
                        3 * (std::size_t{1} << (level - 2 * i - 1));
                }
                p.cycle_length_counts[std::size_t{1} << ((level - 1) / 2)] += 4;
                p.cycle_length_counts[std::size_t{1} << ((level + 1) / 2)] = 1;
            }
            break;
        }
    }
    p.max_cycle_length = p.cycle_length_counts.empty()
                             ? 0
                             : p.cycle_length_counts.rbegin()->first;
    return p;
}

StructureReport verify_structure(Group g, unsigned level, const SchreierOptions& options) {
    StructureReport report;
    report.group = g;
    report.level = level;

    const MultiGraph graph = schreier_graph(g, level, options);
    const GraphStats stats = graph.stats();
    const BlockDecomposition bd = graph.block_decompose();
    const StructureProfile want = predicted_structure(g, level);

    auto add_check = [&](const std::string& name, const std::string& expected,
                         const std::string& actual) {
        StructureCheck c;
        c.name = name;
        c.expected = expected;
        c.actual = actual;
        c.pass = (expected == actual);
        report.all_pass = report.all_pass && c.pass;
        report.checks.push_back(std::move(c));
    };
    auto num = [](std::size_t v) { return std::to_string(v); };

    add_check("vertices", num(want.vertices), num(stats.vertices));
    add_check("edges", num(want.edges), num(stats.edges));
    add_check("loops", num(want.loops), num(stats.loops));
    add_check("bridges", num(want.bridges), num(bd.bridge_count));
    add_check("connected", "yes", graph.connected() ? "yes" : "no");
    add_check("cactus", "yes", bd.is_cactus() ? "yes" : "no");

    auto spectrum_string = [](const std::map<std::size_t, std::size_t>& m) {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [len, count] : m) {
            if (!first) os << ", ";
            first = false;
            os << len << ": " << count;
        }
        os << "}";
        return os.str();
    };
    add_check("cycle_spectrum", spectrum_string(want.cycle_length_counts),
              spectrum_string(bd.cycle_length_counts));

    const std::size_t actual_max =
        bd.cycle_length_counts.empty() ? 0 : bd.cycle_length_counts.rbegin()->first;
    add_check("max_cycle_length", num(want.max_cycle_length), num(actual_max));

    return report;
}

}  // namespace tutte
