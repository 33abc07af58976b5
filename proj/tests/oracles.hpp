#pragma once

// Independent cross-checks used by the test suites: a section-dimension
// computation that pins splitting types with nothing but exact linear
// algebra, and the classification table's arithmetic conditions written
// out as plain predicates, sharing no code with the classifier.

#include <utility>

#include "p1b/bundles.hpp"
#include "p1b/laurmat.hpp"
#include "p1b/rational.hpp"

namespace p1b::oracle {

// Dimension of { s0 in Q[y]^2, deg <= N componentwise : every y-exponent
// of A*s0 is <= t }, by Gaussian elimination over Q.
long section_dim(const Mat2<Rat>& A, long t, long N);

// Splitting type (m, n), m >= n, of the rank-2 bundle on the y-line glued
// by A (s_infinity = A * s_0): the twisted section dimensions
// h(t) = max(0, t-m+1) + max(0, t-n+1) determine n as the first twist
// with a section and m from the eventual slope-2 line h(t) = 2t+2-(m+n).
// The degree cap is grown until the dimensions saturate.
std::pair<long, long> splitting_type(const Mat2<Rat>& A);

struct Flags {
    bool maximal = false;
    bool stiff = false;
    bool superstiff = false;
};

// The characterization of maximality and (super)stiffness per family,
// as plain set membership.
Flags table_flags(const BundleDesc& d);

} // namespace p1b::oracle
