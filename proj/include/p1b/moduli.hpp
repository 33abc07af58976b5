#pragma once

#include <string>
#include <vector>

#include "p1b/bundles.hpp"
#include "p1b/laurent.hpp"
#include "p1b/trunc.hpp"

namespace p1b {

// Point of the moduli space M_a^{b,c}: a nonzero canonical datum with
// b >= 1 and c >= 2 (the only range where nondecomposable bundles exist).
struct ModuliPoint {
    CanonicalP p;

    static ModuliPoint of(CanonicalP p);

    bool operator==(const ModuliPoint& o) const { return p == o.p; }
    bool operator!=(const ModuliPoint& o) const { return !(*this == o); }
};

// dim M_a^{b,c} = (d+1)(2(c-1) - a d)/2 - 1 where d is the largest row
// index whose window is nonempty (d <= b, a d <= c-2).
long dim_moduli(long a, long b, long c);

// Action of GL2 on Q[z]_{<= r} through the identification with the r-th
// symmetric power: homogenize with binomial weights, substitute
// (s, t) -> (alpha s + gamma t, beta s + delta t), de-homogenize.
TruncPoly act_symr(const Rat& alpha, const Rat& beta, const Rat& gamma,
                   const Rat& delta, const TruncPoly& P);

// Generators of the connected automorphism group of F_a acting on the
// moduli space: the z-side GL2 (any a), the y-side GL2 (a = 0 only), and
// the shear y1 -> y1 + y0 * R(z) with deg R <= a (a >= 1 only).
enum class GenKind { ZGl2, YGl2, Shear };

struct FaGenerator {
    GenKind kind = GenKind::ZGl2;
    Rat alpha, beta, gamma, delta; // GL2 kinds
    LaurentPoly r;                 // Shear kind, polynomial with exponents in [0, a]

    static FaGenerator zgl2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    static FaGenerator ygl2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    static FaGenerator shear(LaurentPoly r);

    std::string str() const;
};

// Image of the moduli point under one generator, renormalized to the
// canonical representative.
ModuliPoint act_on_moduli(const FaGenerator& g, const ModuliPoint& m);

// Whether the point is fixed by the group relevant to its base: for a = 0
// the diagonal PGL2 (z-side and y-side moves applied with the same
// matrix), for a >= 1 the full generator set (z-side GL2 and all shears).
// Checks a structured set of generators plus `trials` seeded random ones.
bool is_fixed_diag(long a, const ModuliPoint& m, int trials);

} // namespace p1b
