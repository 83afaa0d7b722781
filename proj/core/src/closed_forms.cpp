#include "tutte/invariants.hpp"

#include <cassert>

namespace tutte {

BiPoly ClosedForm::expand() const {
    // Fold all monomial factors first (free), then multiply the cycle
    // factors smallest-support first so the accumulator grows late.
    BiPoly acc = BiPoly::one();
    for (const ClosedFormFactor& f : factors) {
        if (f.base.term_count() == 1) {
            const BiPoly::Term& t = f.base.terms().front();
            assert(t.coeff == 1);
            acc *= BiPoly::monomial(1, t.x_deg * static_cast<std::uint32_t>(f.exponent),
                                    t.y_deg * static_cast<std::uint32_t>(f.exponent));
        }
    }
    for (const ClosedFormFactor& f : factors) {
        if (f.base.term_count() == 1) continue;
        for (std::uint64_t i = 0; i < f.exponent; ++i) acc *= f.base;
    }
    return acc;
}

ClosedForm closed_form_tutte(Group g, unsigned level, bool with_loops) {
    const StructureProfile profile = predicted_structure(g, level);
    ClosedForm cf;
    cf.group = g;
    cf.level = level;
    cf.with_loops = with_loops;
    if (with_loops && profile.loops > 0) {
        cf.factors.push_back({BiPoly::var_y(), profile.loops});
    }
    if (profile.bridges > 0) {
        cf.factors.push_back({BiPoly::var_x(), profile.bridges});
    }
    for (const auto& [len, count] : profile.cycle_length_counts) {
        cf.factors.push_back({cycle_poly(len), count});
    }
    return cf;
}

unsigned long tau_exponent(Group g, unsigned level) {
    if (g == Group::Grigorchuk) {
        return (1UL << (level - 1)) - 1;
    }
    // 2^{(2^{n+2} + 3n - 5)/6} for odd n, 2^{(2^{n+2} + 3n - 4)/6} for even n.
    const unsigned long num =
        (1UL << (level + 2)) + 3UL * level - (level % 2 == 1 ? 5UL : 4UL);
    assert(num % 6 == 0);
    return num / 6;
}

PredictedEvaluations closed_evaluations(Group g, unsigned level) {
    const StructureProfile p = predicted_structure(g, level);
    PredictedEvaluations out;

    // Every quantity is multiplicative over blocks of the cactus: loops and
    // bridges contribute fixed factors, a k-cycle contributes the evaluation
    // of y + x + ... + x^{k-1} at the corresponding point.
    out.tau = 1;
    out.connected_spanning = pow2(p.loops);
    out.forests = pow2(p.bridges);
    out.two_pow_edges = pow2(p.edges);
    out.acyclic = pow2(p.bridges);
    out.reliability =
        UniPoly::variable().pow(p.bridges);  // bridge: R = p
    out.chromatic = UniPoly::variable() * UniPoly::linear(-1, 1).pow(p.bridges);

    for (const auto& [len, count] : p.cycle_length_counts) {
        out.tau *= big_pow(BigInt(len), count);                       // T(C_k; 1,1) = k
        out.connected_spanning *= big_pow(BigInt(len + 1), count);    // T(C_k; 1,2) = k+1
        out.forests *= big_pow(pow2(len) - 1, count);                 // T(C_k; 2,1) = 2^k - 1
        out.acyclic *= big_pow(pow2(len) - 2, count);                 // T(C_k; 2,0) = 2^k - 2

        // R(C_k) = p^{k-1} (k - (k-1) p)
        const UniPoly cycle_rel =
            UniPoly::variable().pow(len - 1) *
            UniPoly::linear(BigInt(len), -BigInt(len - 1));
        out.reliability *= cycle_rel.pow(count);

        // chi(C_k)/lambda = (-1)^{k-1} [(1-lambda) + ... + (1-lambda)^{k-1}]
        const UniPoly one_minus = UniPoly::linear(1, -1);
        UniPoly geo;
        UniPoly power = one_minus;
        for (std::size_t j = 1; j < len; ++j) {
            geo += power;
            power *= one_minus;
        }
        if (len % 2 == 0) geo = UniPoly::zero() - geo;
        out.chromatic *= geo.pow(count);
    }
    return out;
}

GrowthPoint asymptotic_growth(Group g, unsigned level) {
    GrowthPoint pt;
    pt.level = level;
    pt.ratio = rational(BigInt(tau_exponent(g, level)), pow2(level));
    pt.target = g == Group::Grigorchuk ? rational(1, 2) : rational(2, 3);
    pt.gap = pt.ratio - pt.target;
    pt.ratio_double = pt.ratio.get_d();
    return pt;
}

}  // namespace tutte
