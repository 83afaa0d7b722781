#include "tutte/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tutte {

void write_edge_text(std::ostream& os, const MultiGraph& g) {
    os << "vertices " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v;
        if (!e.label.empty()) os << ' ' << e.label;
        os << '\n';
    }
}

std::string to_edge_text(const MultiGraph& g) {
    std::ostringstream os;
    write_edge_text(os, g);
    return os.str();
}

MultiGraph parse_edge_text(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++line_no;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("graph text: empty input");

    std::size_t n = 0;
    {
        // Parse through a signed type: stream extraction into an unsigned
        // integer silently wraps negative input instead of failing.
        constexpr long long kMaxVertices = 1LL << 26;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        long long count = -1;
        if (first == "vertices") {
            if (!(ls >> count) || count < 0 || count > kMaxVertices) {
                throw ParseError("graph text: malformed 'vertices N' header");
            }
        } else {
            std::istringstream bare(first);
            if (!(bare >> count) || !bare.eof() || count < 0 || count > kMaxVertices) {
                throw ParseError("graph text: expected 'vertices N' or a bare vertex count, got '" +
                                 line + "'");
            }
        }
        n = static_cast<std::size_t>(count);
        std::string extra;
        if (ls >> extra) throw ParseError("graph text: trailing tokens after vertex count");
    }

    MultiGraph g(n);
    while (next_content_line()) {
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string label, extra;
        if (!(ls >> u >> v)) {
            throw ParseError("graph text, line " + std::to_string(line_no) +
                             ": expected 'u v [label]', got '" + line + "'");
        }
        ls >> label;  // optional
        if (ls >> extra) {
            throw ParseError("graph text, line " + std::to_string(line_no) +
                             ": too many tokens in '" + line + "'");
        }
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n) {
            throw ParseError("graph text, line " + std::to_string(line_no) +
                             ": endpoint out of range for " + std::to_string(n) + " vertices");
        }
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), label);
    }
    return g;
}

MultiGraph parse_edge_text(const std::string& text) {
    std::istringstream is(text);
    return parse_edge_text(is);
}

void write_dot(std::ostream& os, const MultiGraph& g) {
    os << "graph schreier {\n";
    const auto& labels = g.vertex_labels();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (!labels.empty()) os << " [label=\"" << labels[v] << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
        os << ";\n";
    }
    os << "}\n";
}

std::string to_dot(const MultiGraph& g) {
    std::ostringstream os;
    write_dot(os, g);
    return os.str();
}

}  // namespace tutte
