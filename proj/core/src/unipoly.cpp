#include "tutte/unipoly.hpp"

#include <sstream>

namespace tutte {

UniPoly UniPoly::constant(BigInt c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::variable() {
    UniPoly p;
    p.coeffs_ = {BigInt(0), BigInt(1)};
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<BigInt> cs) {
    UniPoly p;
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
}

UniPoly UniPoly::linear(BigInt c0, BigInt c1) {
    return from_coeffs({std::move(c0), std::move(c1)});
}

const BigInt& UniPoly::coeff(std::size_t i) const {
    static const BigInt kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly::from_coeffs(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly UniPoly::pow(unsigned long exp) const {
    UniPoly result = UniPoly::one();
    UniPoly base = *this;
    while (exp != 0) {
        if (exp & 1UL) result *= base;
        if (exp >>= 1) base *= base;
    }
    return result;
}

std::string UniPoly::to_string(const std::string& var, bool latex) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i > 0; --i) {
        const std::size_t deg = i - 1;
        BigInt c = coeffs_[deg];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (c != 1 || deg == 0) {
            os << c.get_str();
            if (deg > 0) os << (latex ? " " : "*");
        }
        if (deg > 0) {
            os << var;
            if (deg > 1) {
                if (latex) {
                    os << "^{" << deg << "}";
                } else {
                    os << "^" << deg;
                }
            }
        }
    }
    return os.str();
}

}  // namespace tutte
