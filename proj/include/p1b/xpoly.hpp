#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p1b/errors.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// Dense polynomial in the base parameter x over Q. Coefficient vector
// never has a trailing zero; the zero polynomial is the empty vector.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static XPoly constant(const Rat& v) {
        return v == 0 ? XPoly() : XPoly({v});
    }
    static XPoly x() { return XPoly({Rat(0), Rat(1)}); }

    // (x - root)
    static XPoly linear_root(const Rat& root) { return XPoly({-root, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rat coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    Rat lead() const {
        if (is_zero()) throw Error("lead of zero polynomial");
        return c_.back();
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    XPoly operator+(const XPoly& o) const;
    XPoly operator-() const;
    XPoly operator-(const XPoly& o) const { return *this + (-o); }
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const Rat& s) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<XPoly, XPoly> divmod(const XPoly& d) const;

    XPoly derivative() const;

    Rat eval(const Rat& v) const;

    bool operator==(const XPoly& o) const { return c_ == o.c_; }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Monic gcd over Q[x].
XPoly xpoly_gcd(XPoly f, XPoly g);

// All rational roots with multiplicity plus the root-free cofactor.
// Candidate p/q divisors are found by trial division with an iteration
// cap; candidates beyond the cap stay in the cofactor (sound, possibly
// incomplete, reported rather than guessed).
struct RationalRoots {
    std::vector<std::pair<Rat, long>> roots; // sorted by (num, den)
    XPoly cofactor;                          // rational-root-free (up to the cap)
};
RationalRoots rational_roots(const XPoly& f);

// Squarefree factors (Yun), pairs (factor, multiplicity), monic.
std::vector<std::pair<XPoly, long>> squarefree_factors(const XPoly& f);

// Rational function num/den over Q, kept reduced with monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rat& v) : num_(XPoly::constant(v)) {} // NOLINT(google-explicit-constructor)
    explicit RatFunc(XPoly num) : num_(std::move(num)) {}
    RatFunc(XPoly num, XPoly den);

    static RatFunc x() { return RatFunc(XPoly::x()); }

    bool is_zero() const { return num_.is_zero(); }
    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;

    RatFunc inverse() const;

    // Evaluation at a rational point; Error if the (reduced) denominator
    // vanishes there.
    Rat eval(const Rat& v) const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const;

private:
    void reduce();
    XPoly num_;
    XPoly den_ = XPoly::constant(Rat(1));
};

} // namespace p1b
