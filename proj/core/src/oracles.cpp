#include <cstdint>
#include <numeric>
#include <vector>

#include "tutte/invariants.hpp"

namespace tutte {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

OracleCounts oracle_counts(const MultiGraph& g, std::size_t max_edges) {
    const std::size_t m = g.edge_count();
    if (m > max_edges) {
        throw GuardError("subset oracle: " + std::to_string(m) + " edges exceeds cap of " +
                         std::to_string(max_edges));
    }
    const std::size_t n = g.vertex_count();
    const std::vector<Edge>& edges = g.edges();

    OracleCounts out;
    std::vector<std::uint32_t> parent(n);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::iota(parent.begin(), parent.end(), 0u);
        bool cyclic = false;
        std::size_t joins = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!((mask >> i) & 1)) continue;
            const Edge& e = edges[i];
            if (e.is_loop()) {
                cyclic = true;
                continue;
            }
            const std::uint32_t ru = find_root(parent, e.u);
            const std::uint32_t rv = find_root(parent, e.v);
            if (ru == rv) {
                cyclic = true;
            } else {
                parent[ru] = rv;
                ++joins;
            }
        }
        const bool connected = (n == 0) || (n - joins == 1);
        if (!cyclic) out.spanning_forests += 1;
        if (connected) out.connected_spanning += 1;
        if (!cyclic && connected) out.spanning_trees += 1;
    }

    if (g.stats().loops > 0) {
        out.acyclic_orientations = 0;
    } else {
        std::vector<std::size_t> indeg(n);
        std::vector<char> removed(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::fill(indeg.begin(), indeg.end(), 0);
            std::fill(removed.begin(), removed.end(), 0);
            // Bit i set: edge i runs u -> v; cleared: v -> u.
            for (std::size_t i = 0; i < m; ++i) {
                indeg[((mask >> i) & 1) ? edges[i].v : edges[i].u]++;
            }
            std::size_t peeled = 0;
            bool progress = true;
            while (progress && peeled < n) {
                progress = false;
                for (std::size_t v = 0; v < n; ++v) {
                    if (removed[v] || indeg[v] != 0) continue;
                    removed[v] = 1;
                    ++peeled;
                    progress = true;
                    for (std::size_t i = 0; i < m; ++i) {
                        const VertexId tail = ((mask >> i) & 1) ? edges[i].u : edges[i].v;
                        const VertexId head = ((mask >> i) & 1) ? edges[i].v : edges[i].u;
                        if (tail == v && !removed[head]) indeg[head]--;
                    }
                }
            }
            if (peeled == n) out.acyclic_orientations += 1;
        }
    }
    return out;
}

BigInt oracle_colorings(const MultiGraph& g, unsigned colors) {
    const std::size_t n = g.vertex_count();
    if (n > 10) {
        throw GuardError("coloring oracle: " + std::to_string(n) + " vertices exceeds cap of 10");
    }
    if (colors > 4) {
        throw GuardError("coloring oracle: " + std::to_string(colors) + " colors exceeds cap of 4");
    }
    if (n == 0) return 1;
    if (colors == 0) return 0;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return 0;
    }

    BigInt count = 0;
    std::vector<unsigned> col(n, 0);
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (col[e.u] == col[e.v]) {
                proper = false;
                break;
            }
        }
        if (proper) count += 1;
        std::size_t pos = 0;
        while (pos < n && ++col[pos] == colors) {
            col[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

}  // namespace tutte
