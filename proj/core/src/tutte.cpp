#include "tutte/tutte.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

namespace tutte {

std::string method_name(TutteMethod m) {
    switch (m) {
        case TutteMethod::Auto: return "auto";
        case TutteMethod::SpanningSum: return "sum";
        case TutteMethod::DeletionContraction: return "dc";
        case TutteMethod::CactusProduct: return "cactus";
    }
    return "auto";
}

std::optional<TutteMethod> method_from_name(const std::string& name) {
    if (name == "auto") return TutteMethod::Auto;
    if (name == "sum" || name == "spanning-sum") return TutteMethod::SpanningSum;
    if (name == "dc" || name == "deletion-contraction") return TutteMethod::DeletionContraction;
    if (name == "cactus" || name == "cactus-product") return TutteMethod::CactusProduct;
    return std::nullopt;
}

namespace {

// Union-find with rollback (union by size, no path compression) so the
// subset enumeration can share one structure across the recursion tree.
class RollbackDsu {
  public:
    explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<VertexId>(i);
    }

    VertexId find(VertexId x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        return true;
    }

    void undo_last() {
        const VertexId child = log_.back();
        log_.pop_back();
        size_[parent_[child]] -= size_[child];
        parent_[child] = child;
    }

  private:
    std::vector<VertexId> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<VertexId> log_;
};

// Whitney-rank accumulation for the spanning-subgraph sum: counts[a][b] is
// the number of edge subsets with corank a and nullity b. Loops factor out
// as y^{#loops} up front, halving the enumeration per loop.
struct SubsetEnumerator {
    const std::vector<std::pair<VertexId, VertexId>>& nonloop;
    RollbackDsu& dsu;
    std::size_t components;  // over the full vertex set
    std::size_t vertices;
    std::size_t base_components;
    std::vector<std::vector<std::uint64_t>>& counts;

    void run(std::size_t idx, std::size_t included) {
        if (idx == nonloop.size()) {
            const std::size_t corank = components - base_components;
            const std::size_t rank_a = vertices - components;
            counts[corank][included - rank_a] += 1;
            return;
        }
        run(idx + 1, included);  // exclude
        const auto [u, v] = nonloop[idx];
        const bool merged = dsu.unite(u, v);
        if (merged) --components;
        run(idx + 1, included + 1);  // include
        if (merged) {
            dsu.undo_last();
            ++components;
        }
    }
};

}  // namespace

BiPoly tutte_spanning_sum(const MultiGraph& g, const TutteOptions& options) {
    if (g.edge_count() > options.spanning_sum_max_edges) {
        throw GuardError("spanning-subgraph sum: |E| = " + std::to_string(g.edge_count()) +
                         " exceeds the cap of " + std::to_string(options.spanning_sum_max_edges));
    }
    const GraphStats s = g.stats();

    std::vector<std::pair<VertexId, VertexId>> nonloop;
    std::size_t loops = 0;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            ++loops;
        } else {
            nonloop.emplace_back(e.u, e.v);
        }
    }

    std::vector<std::vector<std::uint64_t>> counts(
        s.rank + 1, std::vector<std::uint64_t>(nonloop.size() + 1, 0));
    RollbackDsu dsu(g.vertex_count());
    SubsetEnumerator en{nonloop, dsu, g.vertex_count(), g.vertex_count(), s.components, counts};
    en.run(0, 0);

    // T = y^{loops} * sum_{a,b} counts[a][b] (x-1)^a (y-1)^b
    const BiPoly xm1 = BiPoly::var_x() - BiPoly::one();
    const BiPoly ym1 = BiPoly::var_y() - BiPoly::one();
    std::vector<BiPoly> xm1_pow(s.rank + 1), ym1_pow(nonloop.size() + 1);
    xm1_pow[0] = BiPoly::one();
    for (std::size_t a = 1; a < xm1_pow.size(); ++a) xm1_pow[a] = xm1_pow[a - 1] * xm1;
    ym1_pow[0] = BiPoly::one();
    for (std::size_t b = 1; b < ym1_pow.size(); ++b) ym1_pow[b] = ym1_pow[b - 1] * ym1;

    BiPoly sum;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        for (std::size_t b = 0; b < counts[a].size(); ++b) {
            if (counts[a][b] == 0) continue;
            sum += BiPoly::constant(BigInt(counts[a][b])) * xm1_pow[a] * ym1_pow[b];
        }
    }
    return BiPoly::monomial(1, 0, static_cast<std::uint32_t>(loops)) * sum;
}

namespace {

BiPoly dc_recurse(const MultiGraph& g, const TutteOptions& options, std::size_t& nodes_left) {
    if (nodes_left == 0) {
        throw GuardError("deletion-contraction: recursion budget exhausted");
    }
    --nodes_left;

    const BlockDecomposition bd = g.block_decompose();
    BiPoly result = BiPoly::monomial(1, static_cast<std::uint32_t>(bd.bridge_count),
                                     static_cast<std::uint32_t>(bd.loop_count));
    for (const Block& b : bd.blocks) {
        if (b.kind == BlockKind::Loop || b.kind == BlockKind::Bridge) continue;
        if (b.kind == BlockKind::Cycle) {
            // T(G) = T(G\e) + T(G/e) applied tail-iteratively along the
            // cycle, so million-edge cycles cannot overflow the stack. Each
            // deletion branch is still derived by a recursive call.
            BiPoly acc;
            MultiGraph sub = g.edge_subgraph(b.edge_ids);
            while (true) {
                const EdgeId e = sub.edges().front().id;  // lowest-id eligible edge
                acc += dc_recurse(sub.delete_edge(e), options, nodes_left);
                sub = sub.contract_edge(e);
                if (sub.edge_count() == 1) {
                    acc += dc_recurse(sub, options, nodes_left);
                    break;
                }
            }
            result *= acc;
        } else {
            MultiGraph sub = g.edge_subgraph(b.edge_ids);
            const EdgeId e = b.edge_ids.front();  // 2-connected: every edge eligible
            BiPoly del = dc_recurse(sub.delete_edge(e), options, nodes_left);
            BiPoly con = dc_recurse(sub.contract_edge(e), options, nodes_left);
            result *= del + con;
        }
    }
    return result;
}

}  // namespace

BiPoly tutte_deletion_contraction(const MultiGraph& g, const TutteOptions& options) {
    const GraphStats s = g.stats();
    if (s.nullity > options.dc_max_nullity) {
        throw GuardError("deletion-contraction: nullity " + std::to_string(s.nullity) +
                         " exceeds the cap of " + std::to_string(options.dc_max_nullity));
    }
    std::size_t budget = options.dc_node_budget;
    return dc_recurse(g, options, budget);
}

BiPoly tutte_cactus(const MultiGraph& g, const TutteOptions&) {
    const BlockDecomposition bd = g.block_decompose();
    if (bd.has_core) {
        throw MethodError("cactus product: graph has a block that is not a loop, bridge, or cycle");
    }
    BiPoly acc = BiPoly::monomial(1, static_cast<std::uint32_t>(bd.bridge_count),
                                  static_cast<std::uint32_t>(bd.loop_count));
    // Ascending cycle length keeps the accumulator small for as long as
    // possible; the map iterates in that order already.
    for (const auto& [len, count] : bd.cycle_length_counts) {
        const BiPoly c = cycle_poly(len);
        for (std::size_t i = 0; i < count; ++i) acc *= c;
    }
    return acc;
}

BiPoly tutte_polynomial(const MultiGraph& g, TutteMethod method, const TutteOptions& options) {
    switch (method) {
        case TutteMethod::SpanningSum: return tutte_spanning_sum(g, options);
        case TutteMethod::DeletionContraction: return tutte_deletion_contraction(g, options);
        case TutteMethod::CactusProduct: return tutte_cactus(g, options);
        case TutteMethod::Auto: break;
    }
    if (g.block_decompose().is_cactus()) return tutte_cactus(g, options);
    return tutte_deletion_contraction(g, options);
}

}  // namespace tutte
