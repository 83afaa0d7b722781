#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tutte {

// Arbitrary-precision signed integer. All polynomial coefficients and all
// counting results (spanning trees, forests, ...) use this type; nothing in
// the library ever rounds.
using BigInt = mpz_class;

// Exact rational number, always stored reduced with positive denominator
// (mpq_class canonicalizes on construction from integers and on arithmetic).
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow2(unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

inline Rational rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational r = 1;
    Rational b = base;
    unsigned long e = exp;
    while (e != 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace tutte
