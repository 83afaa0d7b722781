#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tutte/bipoly.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

enum class TutteMethod { Auto, SpanningSum, DeletionContraction, CactusProduct };

std::string method_name(TutteMethod m);
std::optional<TutteMethod> method_from_name(const std::string& name);  // auto|sum|dc|cactus

struct TutteOptions {
    std::size_t spanning_sum_max_edges = 26;      // 2^|E| subset enumeration cap
    std::size_t dc_max_nullity = 40;              // cyclomatic-number cap for recursion
    std::size_t dc_node_budget = 50'000'000;      // recursion-tree node cap
};

// Definition engine: sums (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)} over all edge
// subsets A (rank via union-find; loops never raise rank). Exponential;
// guarded by spanning_sum_max_edges. Throws GuardError beyond the cap.
BiPoly tutte_spanning_sum(const MultiGraph& g, const TutteOptions& options = {});

// Deletion-contraction with block splitting: loops and bridges come off as
// y^k and x^k, every 2-connected block (cycles included) is recursed on its
// lowest-id edge via T(G) = T(G\e) + T(G/e). Independent of any closed form.
// Throws GuardError when the nullity cap or node budget is exceeded.
BiPoly tutte_deletion_contraction(const MultiGraph& g, const TutteOptions& options = {});

// Cactus product engine: block decomposition, then the product of y per
// loop, x per bridge, and y + x + ... + x^{k-1} per k-edge cycle. Throws
// MethodError if any block is not a loop, bridge, or cycle.
BiPoly tutte_cactus(const MultiGraph& g, const TutteOptions& options = {});

// Auto dispatch: cactus product when the graph is a cactus, otherwise
// deletion-contraction.
BiPoly tutte_polynomial(const MultiGraph& g, TutteMethod method = TutteMethod::Auto,
                        const TutteOptions& options = {});

}  // namespace tutte
