#pragma once

#include <cstdint>
#include <random>

#include "tutte/multigraph.hpp"

namespace test_support {

using tutte::MultiGraph;
using tutte::VertexId;

// Deterministic RNG for reproducible property tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [0, bound). Modulo draw: bias is irrelevant here and
    // the draws stay identical across standard-library implementations.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {  // inclusive
        return lo + below(hi - lo + 1);
    }

  private:
    std::mt19937_64 engine_;
};

inline MultiGraph cycle_graph(std::size_t k) {
    MultiGraph g(k);
    for (std::size_t i = 0; i < k; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
    }
    return g;
}

inline MultiGraph path_graph(std::size_t vertices) {
    MultiGraph g(vertices);
    for (std::size_t i = 0; i + 1 < vertices; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return g;
}

inline MultiGraph complete_graph(std::size_t n) {
    MultiGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return g;
}

// Identify vertex `va` of a with vertex `vb` of b (one-point join). The Tutte
// polynomial is multiplicative across the join vertex.
inline MultiGraph one_point_join(const MultiGraph& a, VertexId va, const MultiGraph& b,
                                 VertexId vb) {
    MultiGraph g(a.vertex_count() + b.vertex_count() - 1);
    for (const tutte::Edge& e : a.edges()) g.add_edge(e.u, e.v);
    auto remap = [&](VertexId v) -> VertexId {
        if (v == vb) return va;
        const VertexId shifted = static_cast<VertexId>(v + a.vertex_count());
        return v < vb ? shifted : static_cast<VertexId>(shifted - 1);
    };
    for (const tutte::Edge& e : b.edges()) g.add_edge(remap(e.u), remap(e.v));
    return g;
}

// Random connected cactus with at most `max_edges` edges: grown by attaching
// loops, pendant bridges, and cycles at existing vertices, which keeps every
// edge on at most one cycle by construction.
inline MultiGraph random_cactus(Rng& rng, std::size_t max_edges = 16) {
    const std::size_t target = rng.between(1, max_edges);
    std::size_t vertices = 1;
    struct Piece {
        int kind;  // 0 = loop, 1 = bridge, 2 = cycle
        VertexId at;
        std::size_t len;
    };
    std::vector<Piece> pieces;
    std::size_t edges = 0;
    while (edges < target) {
        const VertexId at = static_cast<VertexId>(rng.below(vertices));
        const int kind = static_cast<int>(rng.below(4));  // cycles twice as likely
        if (kind == 0) {
            pieces.push_back({0, at, 0});
            edges += 1;
        } else if (kind == 1) {
            pieces.push_back({1, at, 0});
            vertices += 1;
            edges += 1;
        } else {
            const std::size_t len = rng.between(2, 5);
            if (edges + len > max_edges) break;
            pieces.push_back({2, at, len});
            vertices += len - 1;
            edges += len;
        }
    }
    MultiGraph g(vertices);
    std::size_t next = 1;
    for (const Piece& p : pieces) {
        if (p.kind == 0) {
            g.add_edge(p.at, p.at);
        } else if (p.kind == 1) {
            g.add_edge(p.at, static_cast<VertexId>(next++));
        } else {
            VertexId prev = p.at;
            for (std::size_t i = 0; i + 1 < p.len; ++i) {
                const VertexId v = static_cast<VertexId>(next++);
                g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(prev, p.at);
        }
    }
    return g;
}

// Random multigraph (loops and parallel edges allowed), not necessarily
// connected; for deletion-contraction and serialization properties.
inline MultiGraph random_multigraph(Rng& rng, std::size_t max_vertices = 6,
                                    std::size_t max_edges = 10) {
    const std::size_t n = rng.between(1, max_vertices);
    const std::size_t m = rng.below(max_edges + 1);
    MultiGraph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        g.add_edge(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
    }
    return g;
}

}  // namespace test_support
