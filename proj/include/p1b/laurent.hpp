#pragma once

#include <map>
#include <string>
#include <utility>

#include "p1b/errors.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// Laurent polynomial in one variable z over Q, sparse on exponents.
// The zero polynomial is the empty map; no zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly term(long exp, const Rat& c) {
        LaurentPoly f;
        if (c != 0) f.coeffs_[exp] = c;
        return f;
    }

    static LaurentPoly constant(const Rat& c) { return term(0, c); }

    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void set_coeff(long exp, const Rat& c) {
        if (c == 0)
            coeffs_.erase(exp);
        else
            coeffs_[exp] = c;
    }

    long min_exp() const {
        if (is_zero()) throw Error("min_exp of the zero Laurent polynomial");
        return coeffs_.begin()->first;
    }

    long max_exp() const {
        if (is_zero()) throw Error("max_exp of the zero Laurent polynomial");
        return coeffs_.rbegin()->first;
    }

    const std::map<long, Rat>& terms() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_)
                r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
        return r;
    }

    LaurentPoly operator*(const Rat& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
        return r;
    }

    // f(z) * z^k
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    LaurentPoly pow(long n) const {
        if (n < 0) throw Error("LaurentPoly::pow: negative exponent");
        LaurentPoly r = constant(Rat(1));
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Rat eval(const Rat& z) const {
        Rat r(0);
        for (const auto& [e, c] : coeffs_) r += c * rat_pow(z, e);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Rat a = c > 0 ? c : Rat(-c);
            bool unit = (a == 1) && e != 0;
            if (!unit) s += rat_str(a);
            if (e != 0) {
                if (!unit) s += "*";
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<long, Rat> coeffs_;
};

// f(1/z): negates every exponent.
inline LaurentPoly laurent_subst_inv(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.set_coeff(-e, c);
    return r;
}

} // namespace p1b
