#pragma once

#include <iosfwd>
#include <string>

#include "tutte/multigraph.hpp"

namespace tutte {

// Edge-list text format:
//   vertices N
//   u v [label]
// one line per edge, endpoints in 0..N-1, optional single-token label.
// The parser also accepts a bare vertex count as the first line (the
// canonical_text form), blank lines, and '#' comment lines.
void write_edge_text(std::ostream& os, const MultiGraph& g);
std::string to_edge_text(const MultiGraph& g);
MultiGraph parse_edge_text(std::istream& is);
MultiGraph parse_edge_text(const std::string& text);

// Graphviz "graph { ... }" with vertex labels (when present) and edge labels.
void write_dot(std::ostream& os, const MultiGraph& g);
std::string to_dot(const MultiGraph& g);

}  // namespace tutte
