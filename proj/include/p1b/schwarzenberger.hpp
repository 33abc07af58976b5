#pragma once

#include <string>

#include "p1b/bundles.hpp"
#include "p1b/polyn.hpp"
#include "p1b/rational.hpp"

namespace p1b {

// 2x2 matrix of bivariate polynomials, used for transition matrices of the
// Schwarzenberger bundles in both the symmetric (u,v) and the split (s,t)
// coordinates, with u = s + t and v = s*t.
struct SymMat2 {
    Poly2 e[2][2];

    bool operator==(const SymMat2& o) const;
    SymMat2 operator*(const SymMat2& o) const;
    SymMat2 operator*(const Poly2& f) const;
    std::string str(const std::array<std::string, 2>& names) const;
};

// Carrier of (s^n - t^n)/(s - t) as a polynomial in (u, v):
// h_0 = 0, h_1 = 1, h_{n+1} = u*h_n - v*h_{n-1}.
Poly2 h_poly(long n);

// Transition matrix of the Schwarzenberger bundle S_b in (u, v):
// b = -1 -> [[1,0],[0,-v]], b = 0 -> [[0,-1],[1,0]],
// b >= 1 -> [[h_b, v*h_{b-1}], [h_{b+1}, v*h_b]].
SymMat2 schwarz_matrix(long b);

// The un-symmetrized matrix (s - t) * S_b in (s, t) for b >= 0:
// [[s^b - t^b, st(s^{b-1} - t^{b-1})], [s^{b+1} - t^{b+1}, st(s^b - t^b)]].
SymMat2 matrix_st(long b);

// The small Schwarzenberger bundles are isomorphic to known bundles:
// S_{-1} and S_0 are decomposable over P^2, S_1 is P(T_{P^2}).
BundleDesc special_iso(long b);

// Numerical type of the restriction of S_b to a line: b over a tangent of
// the marked conic, otherwise 0 (b even) or 1 (b odd).
long restrict_line(long b, bool tangent);

// Whether the line p*X + q*Y + r*Z is tangent to the conic Y^2 = 4XZ;
// the dual conic condition is q^2 = p*r. Rejects the zero line.
bool is_tangent_line(const Rat& p, const Rat& q, const Rat& r);

// Pull-back of S_b to P^1 x P^1: checks the geometric-sum identity
// (y^{b+1} - z^{b+1})/(y - z) = sum y^i z^{b-i} and that the chart maps
// conjugate the pulled-back transition into the one with P_i = z^i.
bool lift_identity_check(long b);

// Blow-down presentation of the pulled-back bundle: the chart maps
// phi_0, phi_1 intertwine its transition with the split transition of
// bidegree (b+1, b+1) over P^1 x P^1.
bool hat_blowdown_check(long b);

// Conjugation identity behind the Schwarzenberger self-link:
// [[-s-t, 2],[-2st, s+t]] * matrix_st(b) = matrix_st(b) * [[s+t, 2st],[-2, -s-t]],
// both equal to (s - t) times the "+"-signed variant of matrix_st(b).
bool involution_identity_check(long b);

} // namespace p1b
