#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1b/bihomog.hpp"
#include "p1b/errors.hpp"
#include "p1b/rational.hpp"
#include "p1b/trunc.hpp"

namespace p1b {

// Numerical invariants (a, b, c) of a P^1-bundle over the Hirzebruch
// surface F_a: b is the fibre-surface class, c the twist. Convention:
// b >= 0, and c <= 0 whenever b = 0 (the x-swap identifies (b,c) with
// (-b,-c), so this picks one representative per class).
struct NumericalInvariants {
    long a = 0;
    long b = 0;
    long c = 0;

    bool operator==(const NumericalInvariants& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator!=(const NumericalInvariants& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    }
};

// The x-swap (x0 <-> x1) replaces (b, c) by (-b, -c).
inline NumericalInvariants xswap(const NumericalInvariants& inv) {
    return NumericalInvariants{inv.a, -inv.b, -inv.c};
}

inline NumericalInvariants normalized_invariants(NumericalInvariants inv) {
    if (inv.b < 0 || (inv.b == 0 && inv.c > 0)) inv = xswap(inv);
    return inv;
}

// Row bound of the canonical window: row i lives in Q[z]/(z^{bound+1})
// with bound = c - 2 - a*i, clamped at -1 (the zero ring).
inline long canonical_row_bound(const NumericalInvariants& inv, long i) {
    long r = inv.c - 2 - inv.a * i;
    return r < -1 ? -1 : r;
}

// Canonical polynomial datum of a bundle over F_a: the glueing polynomial
// reduced to P = sum_i y0^i y1^{b-i} P_i(z) z^{a i + 1} with
// P_i in Q[z]/(z^{c-1-a i}) and the leading coefficient scaled to 1.
// P = 0 means the bundle is decomposable.
struct CanonicalP {
    NumericalInvariants inv;
    std::vector<TruncPoly> rows; // size b+1, row i has the canonical bound

    bool operator==(const CanonicalP& o) const {
        return inv == o.inv && rows == o.rows;
    }
    bool operator!=(const CanonicalP& o) const { return !(*this == o); }

    std::string str() const;
};

// Named families of the classification plus a catch-all raw datum.
enum class Family { DecFa, DecP2, Umemura, Schwarz, HatSchwarz, V1, Raw };

std::string family_name(Family f);

// Descriptor of a bundle class. Which of a, b, c are meaningful depends
// on the family:
//   DecFa(a,b,c)   decomposable over F_a
//   DecP2(b)       decomposable over P^2
//   Umemura(a,b,c) the Umemura bundles, c = a*k + 2 with 0 <= k <= b
//   Schwarz(b)     Schwarzenberger over P^2, b >= 1
//   HatSchwarz(b)  its pullback over F_0, b >= 1
//   V1(b)          descent of U_1^{b,2} over P^2, b >= 2
//   Raw(p)         an explicit canonical datum
struct BundleDesc {
    Family family = Family::DecFa;
    long a = 0;
    long b = 0;
    long c = 0;
    std::optional<CanonicalP> raw;

    bool operator==(const BundleDesc& o) const;
    bool operator!=(const BundleDesc& o) const { return !(*this == o); }

    // Total order used to keep enumerations and graphs deterministic.
    bool operator<(const BundleDesc& o) const;

    std::string str() const;
};

// Validating factories. These are the only intended way to build
// descriptors; they reject invariants outside each family's range.
BundleDesc make_dec_fa(long a, long b, long c);
BundleDesc make_dec_p2(long b);
BundleDesc make_umemura(long a, long b, long c);
BundleDesc make_schwarz(long b);
BundleDesc make_hat_schwarz(long b);
BundleDesc make_v1(long b);
BundleDesc make_raw(CanonicalP p);

// Unvalidated DecFa, used internally for chain intermediates that may
// violate the b = 0 sign convention before an explicit x-swap step.
BundleDesc make_dec_fa_unchecked(long a, long b, long c);

// Umemura step parameter k with c = a*k + 2.
long umemura_k(const BundleDesc& d);

// Reduce an arbitrary glueing polynomial to canonical form. Every z-power
// of row i outside [a*i + 1, c - 1] is killed by the equivalence moves
// (adding Q1*z^c and Q2(y0 z^a, y1, 1/z)); the window is shifted down by
// z^{-(a i + 1)} and the first nonzero coefficient is scaled to 1.
// b = 0 or c < 2 force P = 0; b = 0 additionally stores c as -|c|.
CanonicalP normalize(long a, long b, long c, const BiHomogLaurent& P);

// Zero canonical datum with the given (already normalized) invariants.
CanonicalP zero_canonical(long a, long b, long c);

// The (a, b, c) of a descriptor; NotOverHirzebruch for the P^2 families.
NumericalInvariants invariants_of(const BundleDesc& d);

// Canonical datum of the descriptor; UnsupportedFamily where none exists
// (DecP2, Schwarz, V1 live over P^2).
CanonicalP canonical_p_of(const BundleDesc& d);

inline bool is_decomposable(const CanonicalP& p) {
    for (const auto& r : p.rows)
        if (!r.is_zero()) return false;
    return true;
}

// Expansion back to the glueing polynomial sum_i y0^i y1^{b-i} P_i z^{ai+1}.
BiHomogLaurent expand(const CanonicalP& p);

// Column identity of Pascal-triangle convolutions used by the symmetric
// power action: C(r+1, p-k) = sum_{i=k..p} C(i, i-k) * C(r-i, p-i).
// Returns both sides; requires 0 <= k <= p <= r.
std::pair<Int, Int> binomial_identity(long r, long p, long k);

} // namespace p1b
