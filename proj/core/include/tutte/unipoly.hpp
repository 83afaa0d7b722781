#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/errors.hpp"
#include "tutte/ring.hpp"

namespace tutte {

// Dense univariate polynomial over arbitrary-precision integers, used for
// chromatic (in lambda) and reliability (in p) polynomials. Trailing zero
// coefficients are trimmed, so equality is coefficient-vector equality.
class UniPoly {
  public:
    UniPoly() = default;  // zero

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(BigInt c);
    static UniPoly one() { return constant(1); }
    static UniPoly variable();                            // the monomial t
    static UniPoly from_coeffs(std::vector<BigInt> cs);   // cs[i] is the t^i coefficient
    static UniPoly linear(BigInt c0, BigInt c1);          // c0 + c1 t

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const BigInt& coeff(std::size_t i) const;  // 0 if beyond degree

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(unsigned long exp) const;

    template <class R>
    R eval(const R& at) const {
        using T = RingTraits<R>;
        R acc = T::zero();
        for (std::size_t i = coeffs_.size(); i > 0; --i) {
            acc = acc * at + T::from_bigint(coeffs_[i - 1]);
        }
        return acc;
    }

    // Text: "3*p^2 - 2*p + 1"; Latex: "3 p^{2} - 2 p + 1" (descending degree).
    std::string to_string(const std::string& var, bool latex = false) const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

template <>
struct RingTraits<UniPoly> {
    static UniPoly zero() { return UniPoly::zero(); }
    static UniPoly one() { return UniPoly::one(); }
    static UniPoly from_bigint(const BigInt& v) { return UniPoly::constant(v); }
};

}  // namespace tutte
