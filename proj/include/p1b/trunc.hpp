#pragma once

#include <string>
#include <vector>

#include "p1b/errors.hpp"
#include "p1b/laurent.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// Element of Q[z]/(z^{r+1}), stored densely as coefficients 0..r.
// bound() == -1 is allowed and denotes the zero ring (every element is 0);
// it shows up naturally as the coefficient space of a forced-zero row.
class TruncPoly {
public:
    TruncPoly() : bound_(-1) {}

    explicit TruncPoly(long bound) : bound_(check_bound(bound)) {
        coeffs_.assign(static_cast<size_t>(bound_ + 1), Rat(0));
    }

    TruncPoly(long bound, std::vector<Rat> coeffs) : bound_(check_bound(bound)) {
        coeffs.resize(static_cast<size_t>(bound_ + 1), Rat(0));
        coeffs_ = std::move(coeffs);
    }

    static TruncPoly constant(long bound, const Rat& c) {
        TruncPoly f(bound);
        if (bound >= 0) f.coeffs_[0] = c;
        return f;
    }

    // Truncates f to exponents 0..bound; negative exponents are rejected.
    static TruncPoly from_laurent(long bound, const LaurentPoly& f) {
        TruncPoly r(bound);
        for (const auto& [e, c] : f.terms()) {
            if (e < 0) throw DegreeMismatch("from_laurent: negative exponent");
            if (e <= bound) r.coeffs_[static_cast<size_t>(e)] = c;
        }
        return r;
    }

    long bound() const { return bound_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Rat coeff(long i) const {
        if (i < 0 || i > bound_) return Rat(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    void set_coeff(long i, const Rat& c) {
        if (i < 0 || i > bound_)
            throw DegreeMismatch("set_coeff: exponent outside bound");
        coeffs_[static_cast<size_t>(i)] = c;
    }

    TruncPoly operator+(const TruncPoly& o) const {
        same_bound(o, "+");
        TruncPoly r = *this;
        for (long i = 0; i <= bound_; ++i)
            r.coeffs_[static_cast<size_t>(i)] += o.coeffs_[static_cast<size_t>(i)];
        return r;
    }

    TruncPoly operator-() const {
        TruncPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    TruncPoly operator-(const TruncPoly& o) const { return *this + (-o); }

    TruncPoly operator*(const TruncPoly& o) const {
        same_bound(o, "*");
        TruncPoly r(bound_);
        for (long i = 0; i <= bound_; ++i) {
            if (coeffs_[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; i + j <= bound_; ++j)
                r.coeffs_[static_cast<size_t>(i + j)] +=
                    coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
        }
        return r;
    }

    TruncPoly operator*(const Rat& s) const {
        TruncPoly r = *this;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    // Composition f(w(z)) in Q[z]/(z^{r+1}); requires w(0) = 0 so the
    // substitution respects the filtration.
    TruncPoly compose(const TruncPoly& w) const {
        same_bound(w, "compose");
        if (w.coeff(0) != 0)
            throw DegreeMismatch("compose: inner series must vanish at 0");
        TruncPoly r = constant(bound_, coeff(0));
        TruncPoly wp = constant(bound_, Rat(1));
        for (long i = 1; i <= bound_; ++i) {
            wp = wp * w;
            if (wp.is_zero()) break;
            r = r + wp * coeff(i);
        }
        return r;
    }

    // Coefficient reversal z^r * f(1/z), the swap move on the window.
    TruncPoly reversed() const {
        TruncPoly r(bound_);
        for (long i = 0; i <= bound_; ++i)
            r.coeffs_[static_cast<size_t>(bound_ - i)] = coeffs_[static_cast<size_t>(i)];
        return r;
    }

    LaurentPoly to_laurent() const {
        LaurentPoly f;
        for (long i = 0; i <= bound_; ++i) f.set_coeff(i, coeffs_[static_cast<size_t>(i)]);
        return f;
    }

    bool operator==(const TruncPoly& o) const {
        return bound_ == o.bound_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "z") const {
        if (bound_ < 0) return "0";
        return to_laurent().str(var);
    }

private:
    static long check_bound(long b) {
        if (b < -1) throw DegreeMismatch("TruncPoly: bound below -1");
        return b;
    }

    void same_bound(const TruncPoly& o, const char* op) const {
        if (bound_ != o.bound_)
            throw DegreeMismatch(std::string("TruncPoly: mixed bounds in ") + op);
    }

    long bound_;
    std::vector<Rat> coeffs_;
};

// Multiplicative inverse in Q[z]/(z^{r+1}) by back-substitution:
// g0 = 1/f0, g_k = -(sum_{i=1..k} f_i g_{k-i}) / f0.
inline TruncPoly trunc_inverse(const TruncPoly& f) {
    if (f.bound() < 0)
        throw ZeroConstantTerm("trunc_inverse: zero ring has no units");
    if (f.coeff(0) == 0)
        throw ZeroConstantTerm("trunc_inverse: constant term vanishes");
    TruncPoly g(f.bound());
    g.set_coeff(0, Rat(1) / f.coeff(0));
    for (long k = 1; k <= f.bound(); ++k) {
        Rat acc(0);
        for (long i = 1; i <= k; ++i) acc += f.coeff(i) * g.coeff(k - i);
        g.set_coeff(k, -acc / f.coeff(0));
    }
    return g;
}

} // namespace p1b
