#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tutte/errors.hpp"

namespace tutte {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// One edge of a multigraph. Loops (u == v) and parallel edges (same endpoint
// pair, distinct ids) are first-class. Ids are stable: deleting or
// contracting other edges never renumbers the survivors.
struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    std::string label;  // optional (generator name for Schreier graphs)

    bool is_loop() const { return u == v; }
};

struct GraphStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t loops = 0;
    std::size_t components = 0;        // isolated vertices count
    std::size_t rank = 0;              // |V| - components
    std::size_t nullity = 0;           // |E| - rank (loops included in |E|)
    std::size_t max_multiplicity = 0;  // largest parallel class (loops keyed per vertex)
};

enum class BlockKind { Loop, Bridge, Cycle, Core };

// A block of the decomposition: a loop, a bridge, or a maximal 2-connected
// subgraph (Cycle when it is a k-edge cycle, k >= 2 edges; Core otherwise).
struct Block {
    BlockKind kind = BlockKind::Bridge;
    std::vector<EdgeId> edge_ids;      // ascending
    std::vector<VertexId> vertices;    // ascending, distinct
    std::size_t cycle_length() const { return edge_ids.size(); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // ordered by smallest edge id
    std::size_t loop_count = 0;
    std::size_t bridge_count = 0;
    std::map<std::size_t, std::size_t> cycle_length_counts;  // length -> #blocks
    bool has_core = false;

    bool is_cactus() const { return !has_core; }
};

// Undirected multigraph on vertices 0..n-1 with stable edge ids.
// Value type: delete_edge / contract_edge / strip_loops return modified
// copies; the original is untouched.
class MultiGraph {
  public:
    MultiGraph() = default;
    explicit MultiGraph(std::size_t vertex_count) : n_(vertex_count) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }  // ascending id

    // Adds an edge and returns its id. Endpoints must be < vertex_count().
    EdgeId add_edge(VertexId u, VertexId v, std::string label = {});

    bool has_edge(EdgeId id) const;
    const Edge& edge(EdgeId id) const;  // throws Error on unknown id

    // Copy without the given edge. Vertex set unchanged.
    MultiGraph delete_edge(EdgeId id) const;

    // Copy with the given non-loop edge contracted: its endpoints are
    // identified (indices above the dropped endpoint shift down by one),
    // parallel copies become loops, every other edge keeps its id. Vertex
    // labels are dropped, since the merged vertex has no canonical word.
    // Throws Error on a loop or unknown id.
    MultiGraph contract_edge(EdgeId id) const;

    // Copy without loop edges (non-loop ids unchanged).
    MultiGraph strip_loops() const;

    // Subgraph on exactly the given edges: vertices renumbered to the sorted
    // distinct endpoints, edge ids preserved (so "lowest id" is stable across
    // the restriction). Labels are dropped.
    MultiGraph edge_subgraph(const std::vector<EdgeId>& ids) const;

    GraphStats stats() const;
    bool connected() const;  // true when components() <= 1

    // Loop / bridge / cycle / core partition of the edge set (iterative DFS;
    // safe on path-like graphs with ~10^6 vertices).
    BlockDecomposition block_decompose() const;

    // Deterministic serialization: vertex count line, then one "u v" line per
    // edge with endpoints normalized (u <= v) and lines sorted numerically,
    // parallel edges repeated. Labels are omitted. Equal graphs (same vertex
    // count, same edge multiset) produce equal text.
    std::string canonical_text() const;

    // Optional per-vertex display labels (binary words for Schreier graphs).
    // Either empty or of size vertex_count().
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    void set_vertex_labels(std::vector<std::string> labels);

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;  // sorted by id ascending
    std::vector<std::string> vertex_labels_;
    EdgeId next_id_ = 0;

    std::size_t components() const;
};

}  // namespace tutte
