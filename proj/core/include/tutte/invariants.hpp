#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/bipoly.hpp"
#include "tutte/laurent.hpp"
#include "tutte/multigraph.hpp"
#include "tutte/schreier.hpp"
#include "tutte/tutte.hpp"
#include "tutte/unipoly.hpp"

namespace tutte {

// ---------------------------------------------------------------------------
// Closed-form Tutte polynomials of the level graphs
// ---------------------------------------------------------------------------

struct ClosedFormFactor {
    BiPoly base;
    std::uint64_t exponent = 1;
};

// Tutte polynomial in factored form: y^loops * x^bridges * prod cycle factors.
struct ClosedForm {
    Group group;
    unsigned level = 0;
    bool with_loops = true;
    std::vector<ClosedFormFactor> factors;

    BiPoly expand() const;  // exact product
};

ClosedForm closed_form_tutte(Group g, unsigned level, bool with_loops);

// ---------------------------------------------------------------------------
// Special evaluations of a computed Tutte polynomial
// ---------------------------------------------------------------------------

struct SpecialEvaluations {
    BigInt tau;                 // T(1,1): spanning trees
    BigInt connected_spanning;  // T(1,2): connected spanning subgraphs
    BigInt forests;             // T(2,1): spanning forests
    BigInt two_pow_edges;       // T(2,2) = 2^{|E|}
    BigInt acyclic;             // T(2,0): acyclic orientations; 0 when loops exist
    bool acyclic_defined = true;  // false (with reason) when the graph has loops
    std::string acyclic_note;
};

SpecialEvaluations special_evaluations(const BiPoly& t, const GraphStats& stats);

// chi(lambda) = (-1)^{rank} lambda^{components} T(1 - lambda, 0); the zero
// polynomial when the graph has loops.
UniPoly chromatic_polynomial(const BiPoly& t, const GraphStats& stats);

// All-terminal reliability R(p) = p^{|V|-1} (1-p)^{nullity} T(1, 1/(1-p))
// expanded exactly (the denominators provably clear). Requires a connected
// graph; throws MethodError otherwise.
UniPoly reliability_polynomial(const BiPoly& t, const GraphStats& stats);

// ---------------------------------------------------------------------------
// Predicted values from the closed-form block profile (no graph generation,
// no polynomial expansion): exact expected counts and polynomials.
// ---------------------------------------------------------------------------

struct PredictedEvaluations {
    BigInt tau;
    BigInt connected_spanning;
    BigInt forests;
    BigInt two_pow_edges;
    BigInt acyclic;  // of the loopless graph
    UniPoly reliability;
    UniPoly chromatic;  // of the loopless graph
};

PredictedEvaluations closed_evaluations(Group g, unsigned level);

// The number of spanning trees as an exact power of two: tau = 2^k.
unsigned long tau_exponent(Group g, unsigned level);

struct GrowthPoint {
    unsigned level = 0;
    Rational ratio;         // log2(tau) / 2^level, exact
    Rational target;        // 1/2 or 2/3
    Rational gap;           // ratio - target, exact (signed)
    double ratio_double = 0.0;
};

GrowthPoint asymptotic_growth(Group g, unsigned level);

// ---------------------------------------------------------------------------
// Ising partition function on the loopless level graphs, t = e^{beta J}
// ---------------------------------------------------------------------------

// Z(t) = 2^c (t^2-1)^{rank} t^{-|E|} T((t^2+1)/(t^2-1), t^2) as an exact
// Laurent polynomial (c = components; rank = |V| - c); throws MethodError if
// the denominator fails to cancel (it provably does for a Tutte polynomial).
LaurentPoly ising_from_tutte(const BiPoly& t, const GraphStats& stats);

// Same substitution at a rational t (t not in {0, 1, -1}; throws Error).
Rational ising_from_tutte_at(const BiPoly& t, const GraphStats& stats, const Rational& at);

// Direct 2^{|V|} spin enumeration: sum over sigma of t^{sum_edges sigma_u
// sigma_v}. Guarded by max_vertices (default 20).
LaurentPoly ising_oracle(const MultiGraph& g, std::size_t max_vertices = 20);

// High-temperature closed form for the level graph as a formal fraction:
// Z_n = 2^{|V|} cosh(beta J)^{|E*|} prod_{cycles} (1 + tanh(beta J)^{len}),
// with cosh -> (t^2+1)/(2t) and tanh -> (t^2-1)/(t^2+1).
LaurentFraction ising_closed_fraction(Group g, unsigned level);

// The common reduced form 2 (t^2+1)^{2^{n-1}} (t^4+1)^{2^{n-1}-1} t^{-(3
// 2^{n-1} - 2)} that both sides equal for the first family.
LaurentPoly ising_grigorchuk_laurent(unsigned level);

struct IsingComparison {
    std::string name;
    std::string status;  // "pass" / "fail" / "skip"
    std::string detail;
};

struct IsingCheckResult {
    Group group;
    unsigned level = 0;
    bool pass = true;           // no comparison failed
    bool oracle_ran = false;    // spin enumeration included (|V| <= 16)
    std::vector<IsingComparison> comparisons;
    LaurentPoly partition;      // the reduced partition function from the Tutte side
};

// Cross-checks the Tutte-substitution partition function against the closed
// form (as fractions and as reduced Laurent polynomials) and, when the graph
// is small enough, against the spin-sum oracle.
IsingCheckResult ising_identity_check(Group g, unsigned level,
                                      const BiPoly* precomputed_loopless_tutte = nullptr);

// ---------------------------------------------------------------------------
// Brute-force oracles (independent of every polynomial code path)
// ---------------------------------------------------------------------------

struct OracleCounts {
    BigInt spanning_trees;
    BigInt spanning_forests;        // loops never allowed in a forest
    BigInt connected_spanning;      // loops allowed
    BigInt acyclic_orientations;    // 0 when the graph has loops
};

// Subset / orientation enumeration; guarded by max_edges (default 20).
OracleCounts oracle_counts(const MultiGraph& g, std::size_t max_edges = 20);

// Proper colorings by direct enumeration; guards: |V| <= 10, colors <= 4.
BigInt oracle_colorings(const MultiGraph& g, unsigned colors);

// ---------------------------------------------------------------------------
// Per-level evaluation report (feeds eval/report/verify)
// ---------------------------------------------------------------------------

struct CheckLine {
    std::string name;
    std::string status;  // "pass" / "fail" / "skip"
    std::string detail;
};

struct EvaluationReport {
    Group group;
    unsigned level = 0;
    GraphStats stats;            // of the level graph with loops
    SpecialEvaluations values;   // from the computed Tutte polynomial
    UniPoly chromatic;           // of the loopless graph, from its Tutte polynomial
    UniPoly reliability;
    GrowthPoint growth;
    std::vector<CheckLine> checks;
    bool all_pass = true;        // no check failed (skips do not fail)
};

// Computes the level graph's Tutte polynomial with the cactus engine, reusing
// `cache_dir` (files keyed by group/level/loops) when provided.
BiPoly tutte_of_level(Group g, unsigned level, bool with_loops,
                      const std::optional<std::string>& cache_dir = std::nullopt);

// Generates the level graph, computes both Tutte polynomials (with and
// without loops), and runs the full cross-check battery: closed form vs
// engine, evaluations vs predictions, loop invariance, chromatic/reliability
// sanity, structure counts, growth, and (for level <= max_ising_level) the
// Ising identity.
EvaluationReport evaluation_report(Group g, unsigned level,
                                   const std::optional<std::string>& cache_dir = std::nullopt,
                                   unsigned max_ising_level = 8);

}  // namespace tutte
