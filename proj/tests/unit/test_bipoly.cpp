#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "tutte/bipoly.hpp"
#include "tutte/laurent.hpp"
#include "tutte/unipoly.hpp"

using namespace tutte;
using test_support::Rng;

namespace {

BiPoly random_bipoly(Rng& rng) {
    std::vector<BiPoly::Term> terms;
    const std::size_t k = rng.below(6);
    for (std::size_t i = 0; i < k; ++i) {
        BiPoly::Term t;
        t.x_deg = static_cast<std::uint32_t>(rng.below(5));
        t.y_deg = static_cast<std::uint32_t>(rng.below(5));
        t.coeff = BigInt(static_cast<long>(rng.between(0, 8)) - 4);
        terms.push_back(std::move(t));
    }
    return BiPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_SUITE_BEGIN("bipoly");

TEST_CASE("cycle polynomials are y + x + ... + x^{k-1}") {
    CHECK(cycle_poly(1) == BiPoly::var_y());
    CHECK(cycle_poly(2) == BiPoly::var_y() + BiPoly::var_x());
    const BiPoly c4 = cycle_poly(4);
    CHECK(c4.coeff(0, 1) == 1);
    CHECK(c4.coeff(1, 0) == 1);
    CHECK(c4.coeff(2, 0) == 1);
    CHECK(c4.coeff(3, 0) == 1);
    CHECK(c4.term_count() == 4);
    CHECK_THROWS_AS(cycle_poly(0), Error);
}

TEST_CASE("binomial squares and empty products expand exactly") {
    const BiPoly s = BiPoly::var_x() + BiPoly::var_y();
    const BiPoly sq = s * s;
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(sq == s.pow(2));
    CHECK(s.pow(0) == BiPoly::one());
    CHECK((s - s).is_zero());
    CHECK((s * BiPoly::zero()).is_zero());
}

TEST_CASE("monomial products use the shift fast path correctly") {
    const BiPoly p = cycle_poly(3);
    const BiPoly m = BiPoly::monomial(2, 1, 4);
    const BiPoly lhs = p * m;
    const BiPoly rhs = m * p;
    CHECK(lhs == rhs);
    CHECK(lhs.coeff(1, 5) == 2);   // y * 2xy^4
    CHECK(lhs.coeff(2, 4) == 2);   // x * 2xy^4
    CHECK(lhs.coeff(3, 4) == 2);   // x^2 * 2xy^4
    CHECK(lhs.term_count() == 3);
    CHECK(p * BiPoly::constant(-3) == BiPoly::constant(-3) * p);
}

TEST_CASE("serialization freezes the three output formats") {
    const BiPoly t = BiPoly::monomial(1, 1, 6);  // x y^6
    CHECK(serialize(t, PolyFormat::Text) == "x*y^6");
    CHECK(serialize(t, PolyFormat::Json) == "[[1,6,\"1\"]]");
    CHECK(serialize(t, PolyFormat::Latex) == "x y^{6}");
    CHECK(serialize(BiPoly::zero(), PolyFormat::Text) == "0");
    const BiPoly mixed = BiPoly::monomial(-2, 2, 0) + BiPoly::one();
    CHECK(serialize(mixed, PolyFormat::Text) == "-2*x^2 + 1");
}

TEST_CASE("json serialization round-trips random polynomials") {
    Rng rng(21);
    for (int i = 0; i < 30; ++i) {
        const BiPoly p = random_bipoly(rng);
        CHECK(parse_bipoly_json(serialize(p, PolyFormat::Json)) == p);
    }
}

TEST_CASE("malformed polynomial json is rejected") {
    CHECK_THROWS_AS(parse_bipoly_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_bipoly_json("{\"a\":1}"), ParseError);
    CHECK_THROWS_AS(parse_bipoly_json("[[1,2]]"), ParseError);
    CHECK_THROWS_AS(parse_bipoly_json("[[1,2,3]]"), ParseError);
    CHECK_THROWS_AS(parse_bipoly_json("[[-1,2,\"1\"]]"), ParseError);
    CHECK_THROWS_AS(parse_bipoly_json("[[1,2,\"xyz\"]]"), ParseError);
}

TEST_CASE("first_difference pinpoints the first mismatching term") {
    const BiPoly a = cycle_poly(3);
    CHECK_FALSE(first_difference(a, a).has_value());
    const BiPoly b = a + BiPoly::monomial(5, 2, 0);
    const auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->find("x^2 y^0") != std::string::npos);
    const auto diff2 = first_difference(a, a + BiPoly::var_x());
    REQUIRE(diff2.has_value());
    CHECK(diff2->find("1 vs 2") != std::string::npos);
}

TEST_CASE("integer evaluation is a ring homomorphism") {
    CHECK((BiPoly::var_x() * BiPoly::var_y()).eval_int(2, 3) == 6);
    Rng rng(22);
    for (int i = 0; i < 30; ++i) {
        const BiPoly p = random_bipoly(rng);
        const BiPoly q = random_bipoly(rng);
        const BigInt a(static_cast<long>(rng.between(0, 6)) - 3);
        const BigInt b(static_cast<long>(rng.between(0, 6)) - 3);
        CHECK((p + q).eval_int(a, b) == p.eval_int(a, b) + q.eval_int(a, b));
        CHECK((p * q).eval_int(a, b) == p.eval_int(a, b) * q.eval_int(a, b));
        CHECK(p.pow(3).eval_int(a, b) == p.eval_int(a, b) * p.eval_int(a, b) * p.eval_int(a, b));
    }
}

TEST_CASE("evaluation works over polynomial and rational rings") {
    const BiPoly p = cycle_poly(3);  // y + x + x^2
    const UniPoly lam = UniPoly::variable();
    const UniPoly at = p.eval<UniPoly>(lam, UniPoly::zero());
    CHECK(at == UniPoly::variable() + UniPoly::variable().pow(2));
    const Rational r = p.eval<Rational>(rational(1, 2), rational(1, 3));
    CHECK(r == rational(1, 3) + rational(1, 2) + rational(1, 4));
}

TEST_CASE("ring laws hold on random polynomials") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        const BiPoly a = random_bipoly(rng);
        const BiPoly b = random_bipoly(rng);
        const BiPoly c = random_bipoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * BiPoly::one() == a);
        CHECK((a + BiPoly::zero()) == a);
    }
}

TEST_CASE("dense univariate polynomials trim, evaluate, and print") {
    const UniPoly p = UniPoly::from_coeffs({BigInt(1), BigInt(-2), BigInt(3)});
    CHECK(p.degree() == 2);
    CHECK(p.to_string("p") == "3*p^2 - 2*p + 1");
    CHECK(p.to_string("p", true) == "3 p^{2} - 2 p + 1");
    CHECK(p.eval<BigInt>(BigInt(2)) == 9);
    CHECK(UniPoly::from_coeffs({BigInt(0), BigInt(0)}).is_zero());
    CHECK(UniPoly::linear(1, -1).eval<Rational>(rational(1, 2)) == rational(1, 2));
    const UniPoly q = UniPoly::linear(1, 1);  // 1 + p
    CHECK(q.pow(2) == UniPoly::from_coeffs({BigInt(1), BigInt(2), BigInt(1)}));
    CHECK((q - q).is_zero());
    CHECK(UniPoly::zero().to_string("p") == "0");
}

TEST_CASE("laurent polynomials handle negative exponents") {
    const LaurentPoly z = LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(2, -2);
    CHECK(z.to_string("t") == "2*t^2 + 2*t^-2");
    CHECK(z.min_exp() == -2);
    CHECK(z.max_exp() == 2);
    CHECK(z.coeff(-2) == 2);
    CHECK(z.coeff(0) == 0);
    CHECK(z.shifted(3).min_exp() == 1);
    const LaurentPoly merged = LaurentPoly::from_terms({{1, BigInt(2)}, {1, BigInt(-2)}});
    CHECK(merged.is_zero());
}

TEST_CASE("exact laurent division succeeds exactly when it should") {
    const LaurentPoly t = LaurentPoly::variable();
    const LaurentPoly num = t * t - LaurentPoly::one();
    const LaurentPoly den = t - LaurentPoly::one();
    const auto q = divide_exact(num, den);
    REQUIRE(q.has_value());
    CHECK(*q == t + LaurentPoly::one());
    CHECK_FALSE(divide_exact(t * t + LaurentPoly::one(), den).has_value());
    // shifted divisors: (2t^2 + 2t^-2) / t^-1 = 2t^3 + 2t^-1
    const LaurentPoly z = LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(2, -2);
    const auto s = divide_exact(z, LaurentPoly::monomial(1, -1));
    REQUIRE(s.has_value());
    CHECK(*s == LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(2, -1));
}

TEST_CASE("fractions compare by cross-multiplication and reduce exactly") {
    const LaurentPoly t = LaurentPoly::variable();
    const LaurentFraction a(t * t - LaurentPoly::one(), t - LaurentPoly::one());
    const LaurentFraction b = LaurentFraction::whole(t + LaurentPoly::one());
    CHECK(a == b);
    const auto reduced = reduce(a);
    REQUIRE(reduced.has_value());
    CHECK(*reduced == t + LaurentPoly::one());
    CHECK_FALSE(reduce(LaurentFraction(t * t + LaurentPoly::one(), t - LaurentPoly::one()))
                    .has_value());
    CHECK_THROWS_AS(LaurentFraction(t, LaurentPoly::zero()), Error);
    const LaurentFraction sum = a + b;
    CHECK(sum == LaurentFraction::whole(LaurentPoly::monomial(2, 1) + LaurentPoly::constant(2)));
    const LaurentFraction prod = a * a;
    CHECK(prod == LaurentFraction::whole((t + LaurentPoly::one()).pow(2)));
}

TEST_SUITE_END();
