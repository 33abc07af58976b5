#pragma once

#include <optional>
#include <set>
#include <string>

#include "p1b/bundles.hpp"

namespace p1b {

// Curves that can be invariant under the connected automorphism group:
// l00 (x0 = y0 = 0) and l10 (x1 = y0 = 0) over a Hirzebruch surface, the
// distinguished curve of a Schwarzenberger bundle, and the fibre over the
// marked point of V_1^b.
enum class Curve { L00, L10, CSchwarz, FiberOverMarkedPoint };

std::string curve_name(Curve c);

// The set of invariant curves of the bundle, per family.
std::set<Curve> invariant_curves(const BundleDesc& desc);

enum class LinkKind {
    DecShift,          // F_a^{b,c} <-> F_a^{b+1,c+a}
    UmeShift,          // U_a^{b,c} <-> U_a^{b+1,c+a}
    UmeToDec,          // U_a^{1,a+2} -> F_a^{0,2} ~ F_a^{0,-2}
    F1ToP2,            // F_1^{b,c} -> P_{|b-c|}
    U1ToV,             // U_1^{b,2} <-> V_1^b (b = 1 gives S_1)
    SchwarzInvolution, // S_b -> S_b
    XSwap,             // F_a^{b,c} ~ F_a^{-b,-c}
    SquareIso,         // hat S_b -> S_b through the double cover
};

std::string link_kind_name(LinkKind k);

// One elementary step between bundle classes. fwd_equivariant means the
// source's connected automorphism group is conjugated into the target's;
// strict marks a proper inclusion. For steps with a curve center,
// fwd_equivariant holds exactly when the center is invariant in the source.
struct LinkStep {
    BundleDesc source;
    BundleDesc target;
    std::optional<Curve> center;
    LinkKind kind = LinkKind::DecShift;
    bool fwd_equivariant = false;
    bool bwd_equivariant = false;
    bool strict = false;
    std::string desc;

    std::string str() const;
};

// Blow up l00 in F_a^{b,c} and contract the strict transform of y0 = 0:
// the shift to F_a^{b+1,c+a}.
LinkStep link_dec(long a, long b, long c);

// The inverse shift F_a^{b,c} -> F_a^{b-1,c-a}, centered at l10. The
// target may violate the b = 0 sign convention; chains normalize it with
// an explicit x-swap step.
LinkStep link_dec_down(long a, long b, long c);

// The shift U_a^{b,c} -> U_a^{b+1,c+a}; equivariant in both directions.
LinkStep link_ume(long a, long b, long c);

// The inverse shift U_a^{b,c} -> U_a^{b-1,c-a}; needs b >= 2 and c > 2.
LinkStep link_ume_down(long a, long b, long c);

// The degenerate end of the Umemura chain: U_a^{1,a+2} -> F_a^{0,-2},
// equivariant forward only, with strict image.
LinkStep link_ume_to_dec(long a);

// Descent along the blow-down F_1 -> P^2: F_1^{b,c} -> P_{|b-c|},
// equivariant forward only, with strict image.
LinkStep link_f1_to_p2(long b, long c);

// Contraction of the fibres over the exceptional curve of F_1 -> P^2:
// U_1^{b,2} -> V_1^b. For b >= 2 equivariant both ways; for b = 1 the
// target is S_1 and the inclusion is strict.
LinkStep link_u1_to_v(long b);

// The blow-up of the fibre over the marked point: V_1^b -> U_1^{b,2},
// inverse of link_u1_to_v for b >= 2.
LinkStep link_v1_to_u1(long b);

// The birational involution of S_b centered at its invariant curve;
// b >= 2 (for b = 1 no curve is invariant).
LinkStep schwarz_involution(long b);

// The isomorphism exchanging x0 and x1 on a decomposable bundle,
// F_a^{b,c} ~ F_a^{-b,-c}; always equivariant both ways.
LinkStep xswap_step(const BundleDesc& d);

// Descent of hat S_b through the double cover P^1 x P^1 -> P^2 onto S_b;
// equivariant forward with strict image.
LinkStep hat_to_schwarz(long b);

// Numerical type of the restriction of V_1^b to a line: b over a line
// through the marked point, |b-2| otherwise.
long v1_restrict_line(long b, bool through_marked);

} // namespace p1b
