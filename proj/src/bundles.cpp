#include "p1b/bundles.hpp"

#include <tuple>

namespace p1b {

std::string CanonicalP::str() const {
    std::string s = inv.str() + " [";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "; ";
        s += rows[i].str();
    }
    return s + "]";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::DecFa: return "DecFa";
        case Family::DecP2: return "DecP2";
        case Family::Umemura: return "Umemura";
        case Family::Schwarz: return "Schwarz";
        case Family::HatSchwarz: return "HatSchwarz";
        case Family::V1: return "V1";
        case Family::Raw: return "Raw";
    }
    return "?";
}

bool BundleDesc::operator==(const BundleDesc& o) const {
    if (family != o.family || a != o.a || b != o.b || c != o.c) return false;
    if (family != Family::Raw) return true;
    return raw == o.raw;
}

bool BundleDesc::operator<(const BundleDesc& o) const {
    return std::tie(family, a, b, c) < std::tie(o.family, o.a, o.b, o.c);
}

std::string BundleDesc::str() const {
    switch (family) {
        case Family::DecFa:
            return "DecFa(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
        case Family::DecP2: return "DecP2(" + std::to_string(b) + ")";
        case Family::Umemura:
            return "Umemura(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
        case Family::Schwarz: return "Schwarz(" + std::to_string(b) + ")";
        case Family::HatSchwarz: return "HatSchwarz(" + std::to_string(b) + ")";
        case Family::V1: return "V1(" + std::to_string(b) + ")";
        case Family::Raw: return "Raw" + (raw ? raw->str() : std::string("()"));
    }
    return "?";
}

BundleDesc make_dec_fa(long a, long b, long c) {
    if (a < 0 || b < 0)
        throw RangeViolation("DecFa: requires a >= 0 and b >= 0");
    if (b == 0 && c > 0)
        throw RangeViolation("DecFa: b = 0 requires c <= 0 (x-swap convention)");
    return BundleDesc{Family::DecFa, a, b, c, std::nullopt};
}

BundleDesc make_dec_fa_unchecked(long a, long b, long c) {
    if (a < 0) throw RangeViolation("DecFa: requires a >= 0");
    return BundleDesc{Family::DecFa, a, b, c, std::nullopt};
}

BundleDesc make_dec_p2(long b) {
    if (b < 0) throw RangeViolation("DecP2: requires b >= 0");
    return BundleDesc{Family::DecP2, 0, b, 0, std::nullopt};
}

BundleDesc make_umemura(long a, long b, long c) {
    if (a < 1 || b < 1) throw InvalidUmemura("Umemura: requires a >= 1 and b >= 1");
    if (c < 2) throw InvalidUmemura("Umemura: requires c >= 2");
    if ((c - 2) % a != 0)
        throw InvalidUmemura("Umemura: c - 2 must be divisible by a");
    long k = (c - 2) / a;
    if (k < 0 || k > b)
        throw InvalidUmemura("Umemura: k = (c-2)/a must lie in [0, b]");
    return BundleDesc{Family::Umemura, a, b, c, std::nullopt};
}

BundleDesc make_schwarz(long b) {
    if (b < 1) throw RangeViolation("Schwarz: requires b >= 1");
    return BundleDesc{Family::Schwarz, 0, b, 0, std::nullopt};
}

BundleDesc make_hat_schwarz(long b) {
    if (b < 1) throw RangeViolation("HatSchwarz: requires b >= 1");
    return BundleDesc{Family::HatSchwarz, 0, b, b + 2, std::nullopt};
}

BundleDesc make_v1(long b) {
    if (b < 2) throw RangeViolation("V1: requires b >= 2");
    return BundleDesc{Family::V1, 0, b, 0, std::nullopt};
}

BundleDesc make_raw(CanonicalP p) {
    BundleDesc d{Family::Raw, p.inv.a, p.inv.b, p.inv.c, std::nullopt};
    d.raw = std::move(p);
    return d;
}

long umemura_k(const BundleDesc& d) {
    if (d.family != Family::Umemura)
        throw UnsupportedFamily("umemura_k: not an Umemura descriptor");
    return (d.c - 2) / d.a;
}

CanonicalP zero_canonical(long a, long b, long c) {
    if (a < 0 || b < 0) throw RangeViolation("zero_canonical: a, b must be >= 0");
    NumericalInvariants inv = normalized_invariants({a, b, c});
    CanonicalP p;
    p.inv = inv;
    p.rows.reserve(static_cast<size_t>(inv.b + 1));
    for (long i = 0; i <= inv.b; ++i)
        p.rows.emplace_back(canonical_row_bound(inv, i));
    return p;
}

CanonicalP normalize(long a, long b, long c, const BiHomogLaurent& P) {
    if (a < 0 || b < 0) throw RangeViolation("normalize: a, b must be >= 0");
    if (P.degree() != b)
        throw DegreeMismatch("normalize: polynomial degree differs from b");

    // b = 0 forces decomposability and c is only defined up to sign;
    // c < 2 leaves no room in any window.
    if (b == 0 || c < 2) return zero_canonical(a, b, c);

    CanonicalP p = zero_canonical(a, b, c);
    for (long i = 0; i <= b; ++i) {
        long lo = a * i + 1, hi = c - 1;
        if (lo > hi) continue; // empty window, row forced to zero
        TruncPoly row(canonical_row_bound(p.inv, i));
        for (const auto& [e, coef] : P.row(i).terms())
            if (lo <= e && e <= hi) row.set_coeff(e - lo, coef);
        p.rows[static_cast<size_t>(i)] = row;
    }

    // Projective scaling: make the first nonzero coefficient 1, scanning
    // rows upward and degrees upward within a row.
    Rat lead(0);
    for (long i = 0; i <= b && lead == 0; ++i)
        for (long j = 0; j <= p.rows[static_cast<size_t>(i)].bound() && lead == 0; ++j)
            lead = p.rows[static_cast<size_t>(i)].coeff(j);
    if (lead != 0 && lead != 1) {
        Rat inv_lead = Rat(1) / lead;
        for (auto& row : p.rows) row = row * inv_lead;
    }
    return p;
}

NumericalInvariants invariants_of(const BundleDesc& d) {
    switch (d.family) {
        case Family::DecFa: return normalized_invariants({d.a, d.b, d.c});
        case Family::Umemura: return {d.a, d.b, d.c};
        case Family::HatSchwarz: return {0, d.b, d.b + 2};
        case Family::Raw: return d.raw->inv;
        case Family::DecP2:
        case Family::Schwarz:
        case Family::V1:
            throw NotOverHirzebruch("invariants_of: " + family_name(d.family) +
                                    " lives over P^2");
    }
    throw UnsupportedFamily("invariants_of: unknown family");
}

CanonicalP canonical_p_of(const BundleDesc& d) {
    switch (d.family) {
        case Family::DecFa:
            return zero_canonical(d.a, d.b, d.c);
        case Family::Umemura: {
            CanonicalP p = zero_canonical(d.a, d.b, d.c);
            long k = umemura_k(d);
            // c = a*k + 2, so row k has bound exactly 0.
            p.rows[static_cast<size_t>(k)] =
                TruncPoly::constant(canonical_row_bound(p.inv, k), Rat(1));
            return p;
        }
        case Family::HatSchwarz: {
            CanonicalP p = zero_canonical(0, d.b, d.b + 2);
            for (long i = 0; i <= d.b; ++i) {
                TruncPoly row(canonical_row_bound(p.inv, i));
                row.set_coeff(i, Rat(1));
                p.rows[static_cast<size_t>(i)] = row;
            }
            return p;
        }
        case Family::Raw:
            return *d.raw;
        case Family::DecP2:
        case Family::Schwarz:
        case Family::V1:
            throw UnsupportedFamily("canonical_p_of: " + family_name(d.family) +
                                    " has no Hirzebruch canonical datum");
    }
    throw UnsupportedFamily("canonical_p_of: unknown family");
}

BiHomogLaurent expand(const CanonicalP& p) {
    BiHomogLaurent P(p.inv.b);
    for (long i = 0; i <= p.inv.b; ++i) {
        const TruncPoly& row = p.rows[static_cast<size_t>(i)];
        if (row.bound() < 0 || row.is_zero()) continue;
        P.set_row(i, row.to_laurent().shifted(p.inv.a * i + 1));
    }
    return P;
}

std::pair<Int, Int> binomial_identity(long r, long p, long k) {
    if (!(0 <= k && k <= p && p <= r))
        throw RangeViolation("binomial_identity: need 0 <= k <= p <= r");
    Int lhs = binomial(r + 1, p - k);
    Int rhs(0);
    for (long i = k; i <= p; ++i) rhs += binomial(i, i - k) * binomial(r - i, p - i);
    return {lhs, rhs};
}

} // namespace p1b
