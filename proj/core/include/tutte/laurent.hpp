#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/errors.hpp"
#include "tutte/ring.hpp"

namespace tutte {

// Laurent polynomial over arbitrary-precision integers: a finite map from
// (possibly negative) exponents to nonzero coefficients, kept sorted by
// exponent. Used for Ising partition functions in t = e^{beta J}.
class LaurentPoly {
  public:
    using Term = std::pair<std::int64_t, BigInt>;  // (exponent, coefficient)

    LaurentPoly() = default;  // zero

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(BigInt c);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly monomial(BigInt c, std::int64_t exp);
    static LaurentPoly variable() { return monomial(1, 1); }  // t
    static LaurentPoly from_terms(std::vector<Term> terms);   // sorts, merges, drops zeros

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    std::int64_t max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }
    const BigInt& coeff(std::int64_t exp) const;  // 0 if absent

    LaurentPoly shifted(std::int64_t delta) const;  // times t^delta

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly pow(unsigned long exp) const;

    // "2*t^2 + 2*t^-2" (text) or "2 t^{2} + 2 t^{-2}" (latex), descending exponent.
    std::string to_string(const std::string& var = "t", bool latex = false) const;

  private:
    std::vector<Term> terms_;
};

// Exact division num / den over the integers; nullopt when den is zero, the
// division leaves a remainder, or a quotient coefficient is non-integral.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// First differing term of two Laurent polynomials (lowest exponent first),
// nullopt when equal.
std::optional<std::string> first_difference(const LaurentPoly& a, const LaurentPoly& b);

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly::zero(); }
    static LaurentPoly one() { return LaurentPoly::one(); }
    static LaurentPoly from_bigint(const BigInt& v) { return LaurentPoly::constant(v); }
};

// Formal fraction over a polynomial ring. No gcd reduction is performed:
// equality checks use cross-multiplication instead, and reduce() asserts
// exact cancellation. Denominators are never the zero polynomial.
template <class P>
struct Fraction {
    P num;
    P den;

    Fraction() : num(P::zero()), den(P::one()) {}
    Fraction(P n, P d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw Error("Fraction: zero denominator");
    }
    static Fraction whole(P p) { return Fraction(std::move(p), P::one()); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.den == b.den) return Fraction(a.num + b.num, a.den);
        return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num * b.den == b.num * a.den;
    }
};

using LaurentFraction = Fraction<LaurentPoly>;

template <>
struct RingTraits<LaurentFraction> {
    static LaurentFraction zero() { return LaurentFraction::whole(LaurentPoly::zero()); }
    static LaurentFraction one() { return LaurentFraction::whole(LaurentPoly::one()); }
    static LaurentFraction from_bigint(const BigInt& v) {
        return LaurentFraction::whole(LaurentPoly::constant(v));
    }
};

// Exact num/den cancellation; nullopt when the denominator does not divide.
std::optional<LaurentPoly> reduce(const LaurentFraction& f);

}  // namespace tutte
