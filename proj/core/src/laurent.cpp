#include "tutte/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tutte {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, std::int64_t exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exp, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const BigInt& LaurentPoly::coeff(std::int64_t exp) const {
    static const BigInt kZero(0);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, std::int64_t e) { return t.first < e; });
    if (it == terms_.end() || it->first != exp) return kZero;
    return it->second;
}

LaurentPoly LaurentPoly::shifted(std::int64_t delta) const {
    LaurentPoly p = *this;
    for (Term& t : p.terms_) t.first += delta;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i].first < rhs.terms_[j].first) {
            out.push_back(std::move(terms_[i++]));
        } else if (rhs.terms_[j].first < terms_[i].first) {
            out.push_back(rhs.terms_[j++]);
        } else {
            Term t = std::move(terms_[i++]);
            t.second += rhs.terms_[j++].second;
            if (t.second != 0) out.push_back(std::move(t));
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < rhs.terms_.size()) out.push_back(rhs.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    LaurentPoly neg = rhs;
    for (Term& t : neg.terms_) t.second = -t.second;
    return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    // Dense accumulation over the exponent span; Ising-scale operands stay in
    // the low thousands of terms.
    const std::int64_t lo = a.min_exp() + b.min_exp();
    const std::int64_t hi = a.max_exp() + b.max_exp();
    std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
        const bool unit = (ca == 1);
        for (const auto& [eb, cb] : b.terms_) {
            BigInt& v = dense[static_cast<std::size_t>(ea + eb - lo)];
            if (unit) {
                v += cb;
            } else {
                v += ca * cb;
            }
        }
    }
    LaurentPoly r;
    for (std::size_t k = 0; k < dense.size(); ++k) {
        if (dense[k] != 0) r.terms_.emplace_back(lo + static_cast<std::int64_t>(k),
                                                 std::move(dense[k]));
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long exp) const {
    LaurentPoly result = LaurentPoly::one();
    LaurentPoly base = *this;
    while (exp != 0) {
        if (exp & 1UL) result *= base;
        if (exp >>= 1) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string(const std::string& var, bool latex) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = terms_.size(); i > 0; --i) {  // descending exponent
        const auto& [exp, coeff] = terms_[i - 1];
        BigInt c = coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (c != 1 || exp == 0) {
            os << c.get_str();
            if (exp != 0) os << (latex ? " " : "*");
        }
        if (exp != 0) {
            os << var;
            if (exp != 1) {
                if (latex) {
                    os << "^{" << exp << "}";
                } else {
                    os << "^" << exp;
                }
            }
        }
    }
    return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return LaurentPoly::zero();

    // Normalize exponents: divide the plain-polynomial parts, shift back.
    const std::int64_t num_shift = num.min_exp();
    const std::int64_t den_shift = den.min_exp();
    const std::size_t nd = static_cast<std::size_t>(num.max_exp() - num_shift);
    const std::size_t dd = static_cast<std::size_t>(den.max_exp() - den_shift);
    if (nd < dd) return std::nullopt;

    std::vector<BigInt> rem(nd + 1), d(dd + 1);
    for (const auto& [e, c] : num.terms()) rem[static_cast<std::size_t>(e - num_shift)] = c;
    for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e - den_shift)] = c;

    const BigInt& lead = d[dd];
    std::vector<BigInt> quot(nd - dd + 1);
    for (std::size_t i = nd - dd + 1; i > 0; --i) {
        const std::size_t qi = i - 1;
        BigInt& top = rem[qi + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        BigInt q = top / lead;
        for (std::size_t k = 0; k <= dd; ++k) rem[qi + k] -= q * d[k];
        quot[qi] = std::move(q);
    }
    for (const BigInt& r : rem) {
        if (r != 0) return std::nullopt;
    }

    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] != 0) {
            terms.emplace_back(static_cast<std::int64_t>(i) + num_shift - den_shift,
                               std::move(quot[i]));
        }
    }
    return LaurentPoly::from_terms(std::move(terms));
}

std::optional<LaurentPoly> reduce(const LaurentFraction& f) { return divide_exact(f.num, f.den); }

std::optional<std::string> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    auto show = [](std::int64_t e, const BigInt& ca, const BigInt& cb) {
        std::ostringstream os;
        os << "t^" << e << ": " << ca.get_str() << " vs " << cb.get_str();
        return os.str();
    };
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].first < tb[j].first) return show(ta[i].first, ta[i].second, 0);
        if (tb[j].first < ta[i].first) return show(tb[j].first, 0, tb[j].second);
        if (ta[i].second != tb[j].second) return show(ta[i].first, ta[i].second, tb[j].second);
        ++i;
        ++j;
    }
    if (i < ta.size()) return show(ta[i].first, ta[i].second, 0);
    if (j < tb.size()) return show(tb[j].first, 0, tb[j].second);
    return std::nullopt;
}

}  // namespace tutte
