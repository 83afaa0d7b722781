#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tutte/bigint.hpp"
#include "tutte/errors.hpp"
#include "tutte/ring.hpp"

namespace tutte {

// Sparse bivariate polynomial over arbitrary-precision integers.
// Terms are kept sorted by (x_deg, y_deg) with no zero coefficients, so
// structural equality is term-list equality and serialization is canonical.
class BiPoly {
  public:
    struct Term {
        std::uint32_t x_deg = 0;
        std::uint32_t y_deg = 0;
        BigInt coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.x_deg == b.x_deg && a.y_deg == b.y_deg && a.coeff == b.coeff;
        }
    };

    BiPoly() = default;  // zero polynomial (no terms)

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(BigInt c);
    static BiPoly one() { return constant(1); }
    static BiPoly monomial(BigInt c, std::uint32_t x_deg, std::uint32_t y_deg);
    static BiPoly var_x() { return monomial(1, 1, 0); }
    static BiPoly var_y() { return monomial(1, 0, 1); }
    // Normalizes: sorts, merges duplicate degree pairs, drops zeros.
    static BiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t x_degree() const;  // 0 for the zero polynomial
    std::uint32_t y_degree() const;
    const BigInt& coeff(std::uint32_t x_deg, std::uint32_t y_deg) const;  // 0 if absent

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly pow(unsigned long exp) const;

    // Evaluates via nested Horner schemes; exact in any commutative ring.
    template <class R>
    R eval(const R& x, const R& y) const {
        using T = RingTraits<R>;
        if (terms_.empty()) return T::zero();
        R result = T::zero();
        bool have_outer = false;
        std::uint32_t outer_deg = 0;
        std::size_t i = terms_.size();
        // Walk x-degree blocks from highest to lowest.
        while (i > 0) {
            std::size_t hi = i;  // one past the block (exclusive)
            const std::uint32_t xd = terms_[hi - 1].x_deg;
            while (i > 0 && terms_[i - 1].x_deg == xd) --i;
            // Horner in y over terms_[i, hi), highest y first.
            R block = T::zero();
            bool have_block = false;
            std::uint32_t block_deg = 0;
            for (std::size_t j = hi; j > i; --j) {
                const Term& t = terms_[j - 1];
                if (!have_block) {
                    block = T::from_bigint(t.coeff);
                    have_block = true;
                } else {
                    block = block * ring_pow(y, block_deg - t.y_deg) + T::from_bigint(t.coeff);
                }
                block_deg = t.y_deg;
            }
            if (block_deg > 0) block = block * ring_pow(y, block_deg);
            if (!have_outer) {
                result = block;
                have_outer = true;
            } else {
                result = result * ring_pow(x, outer_deg - xd) + block;
            }
            outer_deg = xd;
        }
        if (outer_deg > 0) result = result * ring_pow(x, outer_deg);
        return result;
    }

    BigInt eval_int(const BigInt& x, const BigInt& y) const { return eval<BigInt>(x, y); }

  private:
    std::vector<Term> terms_;
};

// Tutte polynomial of the k-edge cycle: y for k = 1 (a loop),
// y + x + x^2 + ... + x^{k-1} for k >= 2. Throws Error for k == 0.
BiPoly cycle_poly(std::size_t k);

enum class PolyFormat { Json, Latex, Text };

// Streams the polynomial term-by-term (no whole-string buffering):
//   Json:  [[x_deg, y_deg, "coeff"], ...] ascending by (x_deg, y_deg)
//   Latex: terms sorted by total degree descending (x_deg descending within),
//          e.g. "x^{2} y + 3 x y^{4}"
//   Text:  same term order as Latex, ASCII, explicit '*' and '^'
void write_bipoly(std::ostream& os, const BiPoly& p, PolyFormat format,
                  const std::string& x_name = "x", const std::string& y_name = "y");
std::string serialize(const BiPoly& p, PolyFormat format, const std::string& x_name = "x",
                      const std::string& y_name = "y");

// Parses the Json serialization back. Throws ParseError on malformed input.
BiPoly parse_bipoly_json(const std::string& text);

// Renders the first (lowest-degree) term where the two polynomials differ,
// or nullopt when equal. Used by verification reporting.
std::optional<std::string> first_difference(const BiPoly& a, const BiPoly& b);

}  // namespace tutte
