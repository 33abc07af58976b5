#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p1b/bundles.hpp"
#include "p1b/laurmat.hpp"
#include "p1b/xpoly.hpp"

namespace p1b {

// A family of rank-2 transition matrices over P^1 (fibre variable y),
// parametrized by the base coordinate x.
using TransitionMat = Mat2<RatFunc>;

// Factorization B^{-1} * a_norm * C = diag(y^m, y^n) with column pairs of
// (B, C) cleared to polynomial x-entries without common factors, so
// det_b = det(B) = det(C) in Q[x] and (B(l), C(l)) never vanishes jointly
// on a full column.
struct SplitData {
    TransitionMat a_norm;
    TransitionMat b;
    TransitionMat c;
    long m = 0;
    long n = 0;
    XPoly det_b;
};

// Jumping-fibre report: generic splitting type (m, n); jumps lists each
// rational parameter value l where the fibre type rises to
// (m + eps, n - eps), as (l, eps). unresolved describes det(B) factors the
// rational-root machinery could not certify either way.
struct JumpReport {
    long m = 0;
    long n = 0;
    std::vector<std::pair<Rat, long>> jumps;
    std::vector<std::string> unresolved;
    XPoly det_b;
};

struct RemoveResult {
    TransitionMat matrix;
    // One entry per elementary modification: the parameter value and the
    // fibre type gap m~ - n~ seen there just before the modification.
    std::vector<std::pair<Rat, long>> steps;
    JumpReport final_report;
};

// Factor A (det must be a unit times y^d) as B * diag(y^m, y^n) * C^{-1}
// and clear the column pairs to polynomial x-coefficients.
SplitData birkhoff_split(const TransitionMat& A);

// One-variable version for specialized matrices.
SplitResult<Rat> birkhoff_split_q(const Mat2<Rat>& A);

// Remove every spurious factor of det(B) (those whose specialization does
// not actually raise the fibre type) by the two-sided column reductions,
// then report the honest jumps. After minimization each remaining rational
// root of det(B) is a genuine jump.
JumpReport detect_jumps(const TransitionMat& A);

// Conjugate A by one-variable splitters of A(l) so the fibre over l is
// diag(y^m~, y^n~), then by diag(x - l, 1). Throws NotNormalizedAtLambda
// when the fibre matrix cannot be evaluated or diagonalized at l.
TransitionMat elementary_modification(const TransitionMat& A, const Rat& lambda);

// Iterate elementary modifications (smallest root first) until no jumping
// fibres remain. Jump locations must all be rational; otherwise
// UnresolvedJump lists the offending det(B) factors.
RemoveResult remove_jumps(const TransitionMat& A);

// Glueing data of a canonical bundle: the twist c and the expanded
// polynomial P(y0, y1, z); the x-pair transforms by [[1, 0], [P, z^c]].
struct TransitionOf {
    long c = 0;
    BiHomogLaurent P;
};
TransitionOf transition_of(const CanonicalP& p);

// For a = 0: the pencil of restrictions to the lines {y = [1 : x]}, as a
// transition family A_x = [[1, 0], [P(1, x, y), y^c]].
TransitionMat restriction_family(const CanonicalP& p);

} // namespace p1b
