#pragma once

#include <string>
#include <vector>

#include "p1b/errors.hpp"
#include "p1b/laurent.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// Polynomial homogeneous of degree b in the pair (y0, y1) whose
// coefficients are Laurent polynomials in z. Row i holds the coefficient
// of y0^i * y1^(b-i).
class BiHomogLaurent {
public:
    explicit BiHomogLaurent(long b = 0)
        : b_(b >= 0 ? b : throw DegreeMismatch("BiHomogLaurent: negative degree")),
          rows_(static_cast<size_t>(b + 1)) {}

    long degree() const { return b_; }

    const LaurentPoly& row(long i) const { return rows_.at(static_cast<size_t>(i)); }
    void set_row(long i, LaurentPoly f) { rows_.at(static_cast<size_t>(i)) = std::move(f); }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    BiHomogLaurent operator+(const BiHomogLaurent& o) const {
        if (b_ != o.b_) throw DegreeMismatch("BiHomogLaurent: mixed degrees in +");
        BiHomogLaurent r(b_);
        for (long i = 0; i <= b_; ++i) r.rows_[static_cast<size_t>(i)] = row(i) + o.row(i);
        return r;
    }

    BiHomogLaurent operator*(const Rat& s) const {
        BiHomogLaurent r(b_);
        for (long i = 0; i <= b_; ++i) r.rows_[static_cast<size_t>(i)] = row(i) * s;
        return r;
    }

    BiHomogLaurent operator*(const LaurentPoly& f) const {
        BiHomogLaurent r(b_);
        for (long i = 0; i <= b_; ++i) r.rows_[static_cast<size_t>(i)] = row(i) * f;
        return r;
    }

    // P evaluated at a rational point of the y-line, as a Laurent
    // polynomial in z.
    LaurentPoly eval_y(const Rat& y0, const Rat& y1) const {
        LaurentPoly acc;
        for (long i = 0; i <= b_; ++i)
            acc = acc + row(i) * (rat_pow(y0, i) * rat_pow(y1, b_ - i));
        return acc;
    }

    bool operator==(const BiHomogLaurent& o) const {
        return b_ == o.b_ && rows_ == o.rows_;
    }
    bool operator!=(const BiHomogLaurent& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (long i = 0; i <= b_; ++i) {
            if (row(i).is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string mon;
            if (i > 0) mon += "y0" + (i > 1 ? "^" + std::to_string(i) : "");
            if (b_ - i > 0)
                mon += std::string(mon.empty() ? "" : "*") + "y1" +
                       (b_ - i > 1 ? "^" + std::to_string(b_ - i) : "");
            s += "(" + row(i).str() + ")";
            if (!mon.empty()) s += "*" + mon;
        }
        return s;
    }

private:
    long b_;
    std::vector<LaurentPoly> rows_;
};

// P(p*y0 + q*y1, r*y0 + s*y1, z) with Laurent-polynomial entries. Covers
// both constant GL2 moves (p,q,r,s scalars) and the shear
// (y0, y1) -> (y0, y1 + y0*R(z)) via p = s = 1, q = 0, r = R.
inline BiHomogLaurent subst_y_affine(const BiHomogLaurent& P,
                                     const LaurentPoly& p, const LaurentPoly& q,
                                     const LaurentPoly& r, const LaurentPoly& s) {
    const long b = P.degree();
    BiHomogLaurent out(b);

    // Precompute the needed powers once.
    std::vector<LaurentPoly> pp(static_cast<size_t>(b + 1)),
        qq(static_cast<size_t>(b + 1)), rr(static_cast<size_t>(b + 1)),
        ss(static_cast<size_t>(b + 1));
    pp[0] = qq[0] = rr[0] = ss[0] = LaurentPoly::constant(Rat(1));
    for (long k = 1; k <= b; ++k) {
        pp[static_cast<size_t>(k)] = pp[static_cast<size_t>(k - 1)] * p;
        qq[static_cast<size_t>(k)] = qq[static_cast<size_t>(k - 1)] * q;
        rr[static_cast<size_t>(k)] = rr[static_cast<size_t>(k - 1)] * r;
        ss[static_cast<size_t>(k)] = ss[static_cast<size_t>(k - 1)] * s;
    }

    for (long i = 0; i <= b; ++i) {
        if (P.row(i).is_zero()) continue;
        for (long u = 0; u <= i; ++u) {
            for (long v = 0; v <= b - i; ++v) {
                Rat coef(binomial(i, u) * binomial(b - i, v));
                LaurentPoly c = pp[static_cast<size_t>(u)] *
                                qq[static_cast<size_t>(i - u)] *
                                rr[static_cast<size_t>(v)] *
                                ss[static_cast<size_t>(b - i - v)] * coef;
                if (c.is_zero()) continue;
                long j = u + v;
                out.set_row(j, out.row(j) + P.row(i) * c);
            }
        }
    }
    return out;
}

inline BiHomogLaurent subst_y_gl2(const BiHomogLaurent& P, const Rat& p,
                                  const Rat& q, const Rat& r, const Rat& s) {
    if (p * s - q * r == 0)
        throw SingularMatrix("subst_y_gl2: determinant vanishes");
    return subst_y_affine(P, LaurentPoly::constant(p), LaurentPoly::constant(q),
                          LaurentPoly::constant(r), LaurentPoly::constant(s));
}

inline BiHomogLaurent subst_y_shear(const BiHomogLaurent& P, const LaurentPoly& R) {
    return subst_y_affine(P, LaurentPoly::constant(Rat(1)), LaurentPoly(),
                          R, LaurentPoly::constant(Rat(1)));
}

} // namespace p1b
