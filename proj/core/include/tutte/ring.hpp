#pragma once

#include "tutte/bigint.hpp"

namespace tutte {

// Commutative-ring glue used by the generic polynomial evaluators. A ring
// type R must have +, *, == and a RingTraits<R> specialization. Evaluation of
// an integer polynomial into R is then a ring homomorphism.
template <class R>
struct RingTraits;  // zero(), one(), from_bigint(const BigInt&)

template <>
struct RingTraits<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static BigInt from_bigint(const BigInt& v) { return v; }
};

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
};

template <class R>
R ring_pow(const R& base, unsigned long exp) {
    R result = RingTraits<R>::one();
    R b = base;
    unsigned long e = exp;
    while (e != 0) {
        if (e & 1UL) result = result * b;
        b = b * b;
        e >>= 1;
    }
    return result;
}

}  // namespace tutte
