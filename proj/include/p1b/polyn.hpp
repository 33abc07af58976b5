#pragma once

#include <array>
#include <map>
#include <string>

#include "p1b/errors.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// Sparse polynomial in N commuting variables over Q. Exponents are kept as
// signed longs, so Laurent monomials (needed for chart changes z -> 1/z)
// are representable without a separate type.
template <int N>
class PolyN {
public:
    using Key = std::array<long, N>;

    PolyN() = default;

    static PolyN term(const Key& e, const Rat& c) {
        PolyN p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static PolyN constant(const Rat& c) { return term(Key{}, c); }

    static PolyN var(int k, long e = 1) {
        Key key{};
        key.at(static_cast<size_t>(k)) = e;
        return term(key, Rat(1));
    }

    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Key& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::map<Key, Rat>& terms() const { return terms_; }

    PolyN operator+(const PolyN& o) const {
        PolyN r = *this;
        for (const auto& [e, c] : o.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    PolyN operator-() const {
        PolyN r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    PolyN operator-(const PolyN& o) const { return *this + (-o); }

    PolyN operator*(const PolyN& o) const {
        PolyN r;
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Key e;
                for (int k = 0; k < N; ++k)
                    e[static_cast<size_t>(k)] =
                        e1[static_cast<size_t>(k)] + e2[static_cast<size_t>(k)];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    Rat c = c1 * c2;
                    if (c != 0) r.terms_[e] = c;
                } else {
                    it->second += c1 * c2;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    PolyN operator*(const Rat& s) const {
        if (s == 0) return PolyN();
        PolyN r = *this;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    PolyN pow(long n) const {
        if (n < 0) throw RangeViolation("PolyN::pow: negative exponent");
        PolyN r = constant(Rat(1));
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    // Substitute variable k by its reciprocal (negate its exponents).
    PolyN subst_var_inv(int k) const {
        PolyN r;
        for (const auto& [e, c] : terms_) {
            Key f = e;
            f.at(static_cast<size_t>(k)) = -f.at(static_cast<size_t>(k));
            r.terms_[f] = c;
        }
        return r;
    }

    bool operator==(const PolyN& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyN& o) const { return !(*this == o); }

    std::string str(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string mon;
            for (int k = 0; k < N; ++k) {
                long ek = e[static_cast<size_t>(k)];
                if (ek == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += names[static_cast<size_t>(k)];
                if (ek != 1) mon += "^" + std::to_string(ek);
            }
            std::string coef = rat_str(c);
            std::string piece;
            if (mon.empty()) {
                piece = coef;
            } else if (coef == "1") {
                piece = mon;
            } else if (coef == "-1") {
                piece = "-" + mon;
            } else {
                piece = coef + "*" + mon;
            }
            if (s.empty()) {
                s = piece;
            } else if (!piece.empty() && piece[0] == '-') {
                s += " - " + piece.substr(1);
            } else {
                s += " + " + piece;
            }
        }
        return s;
    }

private:
    std::map<Key, Rat> terms_;
};

using Poly2 = PolyN<2>;
using Poly3 = PolyN<3>;

} // namespace p1b
