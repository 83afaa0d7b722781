#include "tutte/bipoly.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tutte {

namespace {

inline std::uint64_t term_key(std::uint32_t x, std::uint32_t y) {
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

inline std::uint64_t hash_key(std::uint64_t k) {
    // splitmix64 finalizer: cheap and well-distributed for packed degrees
    k += 0x9e3779b97f4a7c15ULL;
    k = (k ^ (k >> 30)) * 0xbf58476d1ce4e5b9ULL;
    k = (k ^ (k >> 27)) * 0x94d049bb133111ebULL;
    return k ^ (k >> 31);
}

// Open-addressing accumulator mapping packed (x_deg, y_deg) keys to big-int
// sums. Product expansion of closed forms funnels ~10^8 fused adds through
// here, so this avoids std::map/unordered_map overhead.
class TermAccumulator {
  public:
    explicit TermAccumulator(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        table_.assign(cap, Slot{});
    }

    BigInt& slot(std::uint64_t key) {
        if ((count_ + 1) * 2 > table_.size()) grow();
        const std::size_t mask = table_.size() - 1;
        std::size_t i = hash_key(key) & mask;
        while (true) {
            Slot& s = table_[i];
            if (s.idx == 0) {
                keys_.push_back(key);
                vals_.emplace_back();
                s.key = key;
                s.idx = static_cast<std::uint32_t>(keys_.size());
                ++count_;
                return vals_.back();
            }
            if (s.key == key) return vals_[s.idx - 1];
            i = (i + 1) & mask;
        }
    }

    std::vector<BiPoly::Term> take_sorted() {
        std::vector<std::uint32_t> order(keys_.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return keys_[a] < keys_[b]; });
        std::vector<BiPoly::Term> terms;
        terms.reserve(order.size());
        for (std::uint32_t idx : order) {
            if (vals_[idx] == 0) continue;
            BiPoly::Term t;
            t.x_deg = static_cast<std::uint32_t>(keys_[idx] >> 32);
            t.y_deg = static_cast<std::uint32_t>(keys_[idx] & 0xffffffffULL);
            t.coeff = std::move(vals_[idx]);
            terms.push_back(std::move(t));
        }
        return terms;
    }

  private:
    struct Slot {
        std::uint64_t key = 0;
        std::uint32_t idx = 0;  // 1-based into keys_/vals_; 0 = empty
    };

    void grow() {
        std::vector<Slot> bigger(table_.size() * 2, Slot{});
        const std::size_t mask = bigger.size() - 1;
        for (std::uint32_t i = 0; i < keys_.size(); ++i) {
            std::size_t j = hash_key(keys_[i]) & mask;
            while (bigger[j].idx != 0) j = (j + 1) & mask;
            bigger[j] = Slot{keys_[i], i + 1};
        }
        table_.swap(bigger);
    }

    std::vector<Slot> table_;
    std::vector<std::uint64_t> keys_;
    std::vector<BigInt> vals_;
    std::size_t count_ = 0;
};

}  // namespace

BiPoly BiPoly::constant(BigInt c) {
    BiPoly p;
    if (c != 0) p.terms_.push_back(Term{0, 0, std::move(c)});
    return p;
}

BiPoly BiPoly::monomial(BigInt c, std::uint32_t x_deg, std::uint32_t y_deg) {
    BiPoly p;
    if (c != 0) p.terms_.push_back(Term{x_deg, y_deg, std::move(c)});
    return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return term_key(a.x_deg, a.y_deg) < term_key(b.x_deg, b.y_deg);
    });
    BiPoly p;
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().x_deg == t.x_deg &&
            p.terms_.back().y_deg == t.y_deg) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::uint32_t BiPoly::x_degree() const {
    return terms_.empty() ? 0 : terms_.back().x_deg;  // sorted by (x, y)
}

std::uint32_t BiPoly::y_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.y_deg);
    return d;
}

const BigInt& BiPoly::coeff(std::uint32_t x_deg, std::uint32_t y_deg) const {
    static const BigInt kZero(0);
    const std::uint64_t key = term_key(x_deg, y_deg);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) {
                                   return term_key(t.x_deg, t.y_deg) < k;
                               });
    if (it == terms_.end() || term_key(it->x_deg, it->y_deg) != key) return kZero;
    return it->coeff;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        const std::uint64_t ka = term_key(terms_[i].x_deg, terms_[i].y_deg);
        const std::uint64_t kb = term_key(rhs.terms_[j].x_deg, rhs.terms_[j].y_deg);
        if (ka < kb) {
            out.push_back(std::move(terms_[i++]));
        } else if (kb < ka) {
            out.push_back(rhs.terms_[j++]);
        } else {
            Term t = std::move(terms_[i++]);
            t.coeff += rhs.terms_[j++].coeff;
            if (t.coeff != 0) out.push_back(std::move(t));
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < rhs.terms_.size()) out.push_back(rhs.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    BiPoly neg = rhs;
    for (Term& t : neg.terms_) t.coeff = -t.coeff;
    return *this += neg;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();

    // Monomial factors keep the term list sorted; shift in place.
    auto scaled_shift = [](const std::vector<BiPoly::Term>& ts, const BiPoly::Term& m) {
        std::vector<BiPoly::Term> out;
        out.reserve(ts.size());
        for (const BiPoly::Term& t : ts) {
            BiPoly::Term nt;
            nt.x_deg = t.x_deg + m.x_deg;
            nt.y_deg = t.y_deg + m.y_deg;
            nt.coeff = t.coeff * m.coeff;
            out.push_back(std::move(nt));
        }
        return out;
    };
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        BiPoly r;
        r.terms_ = a.terms_.size() == 1 ? scaled_shift(b.terms_, a.terms_[0])
                                        : scaled_shift(a.terms_, b.terms_[0]);
        return r;
    }

    const auto& outer = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const auto& inner = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
    TermAccumulator acc(inner.size() + outer.size());
    for (const BiPoly::Term& to : outer) {
        const bool unit = (to.coeff == 1);
        for (const BiPoly::Term& ti : inner) {
            BigInt& v = acc.slot(term_key(to.x_deg + ti.x_deg, to.y_deg + ti.y_deg));
            if (unit) {
                v += ti.coeff;
            } else {
                v += to.coeff * ti.coeff;  // fused mpz_addmul
            }
        }
    }
    BiPoly r;
    r.terms_ = acc.take_sorted();
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BiPoly BiPoly::pow(unsigned long exp) const {
    BiPoly result = BiPoly::one();
    BiPoly base = *this;
    while (exp != 0) {
        if (exp & 1UL) result *= base;
        if (exp >>= 1) base *= base;
    }
    return result;
}

BiPoly cycle_poly(std::size_t k) {
    if (k == 0) throw Error("cycle_poly: cycle length must be >= 1");
    BiPoly p = BiPoly::var_y();
    if (k == 1) return p;  // a loop
    std::vector<BiPoly::Term> terms;
    terms.push_back(BiPoly::Term{0, 1, BigInt(1)});
    for (std::uint32_t i = 1; i < k; ++i) terms.push_back(BiPoly::Term{i, 0, BigInt(1)});
    return BiPoly::from_terms(std::move(terms));
}

namespace {

// Shared term renderer for the human-readable formats.
void write_readable(std::ostream& os, const BiPoly& p, bool latex, const std::string& x_name,
                    const std::string& y_name) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    // Total degree descending, then x-degree descending: the conventional
    // display order for Tutte polynomials.
    std::vector<const BiPoly::Term*> order;
    order.reserve(p.terms().size());
    for (const auto& t : p.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const BiPoly::Term* a, const BiPoly::Term* b) {
        const std::uint64_t ta = std::uint64_t(a->x_deg) + a->y_deg;
        const std::uint64_t tb = std::uint64_t(b->x_deg) + b->y_deg;
        if (ta != tb) return ta > tb;
        return a->x_deg > b->x_deg;
    });

    auto write_power = [&](const std::string& name, std::uint32_t deg, bool lead_sep) {
        if (deg == 0) return;
        if (lead_sep) os << (latex ? " " : "*");
        os << name;
        if (deg > 1) {
            if (latex) {
                os << "^{" << deg << "}";
            } else {
                os << "^" << deg;
            }
        }
    };

    bool first = true;
    for (const BiPoly::Term* t : order) {
        BigInt c = t->coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool has_vars = t->x_deg > 0 || t->y_deg > 0;
        bool coeff_written = false;
        if (c != 1 || !has_vars) {
            os << c.get_str();
            coeff_written = true;
        }
        write_power(x_name, t->x_deg, coeff_written);
        write_power(y_name, t->y_deg, coeff_written || t->x_deg > 0);
    }
}

}  // namespace

void write_bipoly(std::ostream& os, const BiPoly& p, PolyFormat format, const std::string& x_name,
                  const std::string& y_name) {
    switch (format) {
        case PolyFormat::Json: {
            os << "[";
            bool first = true;
            for (const auto& t : p.terms()) {
                if (!first) os << ",";
                first = false;
                os << "[" << t.x_deg << "," << t.y_deg << ",\"" << t.coeff.get_str() << "\"]";
            }
            os << "]";
            break;
        }
        case PolyFormat::Latex:
            write_readable(os, p, /*latex=*/true, x_name, y_name);
            break;
        case PolyFormat::Text:
            write_readable(os, p, /*latex=*/false, x_name, y_name);
            break;
    }
}

std::string serialize(const BiPoly& p, PolyFormat format, const std::string& x_name,
                      const std::string& y_name) {
    std::ostringstream os;
    write_bipoly(os, p, format, x_name, y_name);
    return os.str();
}

BiPoly parse_bipoly_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("polynomial JSON: expected a top-level array");
    std::vector<BiPoly::Term> terms;
    terms.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_unsigned() ||
            !item[1].is_number_unsigned() || !item[2].is_string()) {
            throw ParseError("polynomial JSON: each term must be [x_deg, y_deg, \"coeff\"]");
        }
        BiPoly::Term t;
        t.x_deg = item[0].get<std::uint32_t>();
        t.y_deg = item[1].get<std::uint32_t>();
        try {
            t.coeff = BigInt(item[2].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("polynomial JSON: bad integer literal '" +
                             item[2].get<std::string>() + "'");
        }
        terms.push_back(std::move(t));
    }
    return BiPoly::from_terms(std::move(terms));
}

std::optional<std::string> first_difference(const BiPoly& a, const BiPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    auto show = [](std::uint32_t xd, std::uint32_t yd, const BigInt& ca, const BigInt& cb) {
        std::ostringstream os;
        os << "x^" << xd << " y^" << yd << ": " << ca.get_str() << " vs " << cb.get_str();
        return os.str();
    };
    while (i < ta.size() && j < tb.size()) {
        const std::uint64_t ka = term_key(ta[i].x_deg, ta[i].y_deg);
        const std::uint64_t kb = term_key(tb[j].x_deg, tb[j].y_deg);
        if (ka < kb) return show(ta[i].x_deg, ta[i].y_deg, ta[i].coeff, 0);
        if (kb < ka) return show(tb[j].x_deg, tb[j].y_deg, 0, tb[j].coeff);
        if (ta[i].coeff != tb[j].coeff) {
            return show(ta[i].x_deg, ta[i].y_deg, ta[i].coeff, tb[j].coeff);
        }
        ++i;
        ++j;
    }
    if (i < ta.size()) return show(ta[i].x_deg, ta[i].y_deg, ta[i].coeff, 0);
    if (j < tb.size()) return show(tb[j].x_deg, tb[j].y_deg, 0, tb[j].coeff);
    return std::nullopt;
}

}  // namespace tutte
