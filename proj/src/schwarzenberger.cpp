#include "p1b/schwarzenberger.hpp"

#include "p1b/errors.hpp"

namespace p1b {

bool SymMat2::operator==(const SymMat2& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(e[i][j] == o.e[i][j])) return false;
    return true;
}

SymMat2 SymMat2::operator*(const SymMat2& o) const {
    SymMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
    return r;
}

SymMat2 SymMat2::operator*(const Poly2& f) const {
    SymMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[i][j] = e[i][j] * f;
    return r;
}

std::string SymMat2::str(const std::array<std::string, 2>& names) const {
    return "[[" + e[0][0].str(names) + ", " + e[0][1].str(names) + "], [" +
           e[1][0].str(names) + ", " + e[1][1].str(names) + "]]";
}

Poly2 h_poly(long n) {
    if (n < 0) throw RangeViolation("h_poly: n >= 0 required");
    const Poly2 u = Poly2::var(0), v = Poly2::var(1);
    Poly2 prev;                          // h_0
    Poly2 cur = Poly2::constant(Rat(1)); // h_1
    if (n == 0) return prev;
    for (long k = 1; k < n; ++k) {
        Poly2 next = u * cur - v * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SymMat2 schwarz_matrix(long b) {
    if (b < -1) throw RangeViolation("schwarz_matrix: b >= -1 required");
    const Poly2 one = Poly2::constant(Rat(1));
    const Poly2 u = Poly2::var(0), v = Poly2::var(1);
    SymMat2 m;
    if (b == -1) {
        m.e[0][0] = one;
        m.e[1][1] = -v;
    } else if (b == 0) {
        m.e[0][1] = -one;
        m.e[1][0] = one;
    } else {
        m.e[0][0] = h_poly(b);
        m.e[0][1] = v * h_poly(b - 1);
        m.e[1][0] = h_poly(b + 1);
        m.e[1][1] = v * h_poly(b);
    }
    return m;
}

SymMat2 matrix_st(long b) {
    if (b < 0) throw RangeViolation("matrix_st: b >= 0 required");
    const Poly2 s = Poly2::var(0), t = Poly2::var(1);
    SymMat2 m;
    m.e[0][0] = s.pow(b) - t.pow(b);
    m.e[0][1] = s.pow(b) * t - s * t.pow(b);
    m.e[1][0] = s.pow(b + 1) - t.pow(b + 1);
    m.e[1][1] = s.pow(b + 1) * t - s * t.pow(b + 1);
    return m;
}

BundleDesc special_iso(long b) {
    switch (b) {
        case -1: return make_dec_p2(1);
        case 0: return make_dec_p2(0);
        case 1: return make_schwarz(1);
        default: throw RangeViolation("special_iso: b must be -1, 0 or 1");
    }
}

long restrict_line(long b, bool tangent) {
    if (b < 1) throw RangeViolation("restrict_line: b >= 1 required");
    if (tangent) return b;
    return b % 2 == 0 ? 0 : 1;
}

bool is_tangent_line(const Rat& p, const Rat& q, const Rat& r) {
    if (p == 0 && q == 0 && r == 0)
        throw RangeViolation("is_tangent_line: zero line");
    return q * q == p * r;
}

namespace {

// The glueing polynomial of a canonical datum over F_0, evaluated at
// y0 = 1, y1 = s, z = t, as a polynomial in (s, t).
Poly2 glueing_at_st(const CanonicalP& p) {
    const long b = p.inv.b;
    Poly2 out;
    for (long i = 0; i <= b; ++i) {
        const TruncPoly& row = p.rows[static_cast<size_t>(i)];
        for (long j = 0; j <= row.bound(); ++j) {
            if (row.coeff(j) == 0) continue;
            out = out + Poly2::term({b - i, j + 1}, row.coeff(j));
        }
    }
    return out;
}

// The same as a polynomial in (y0, y1, z).
Poly3 glueing_poly3(const CanonicalP& p) {
    const long b = p.inv.b;
    Poly3 out;
    for (long i = 0; i <= b; ++i) {
        const TruncPoly& row = p.rows[static_cast<size_t>(i)];
        for (long j = 0; j <= row.bound(); ++j) {
            if (row.coeff(j) == 0) continue;
            out = out + Poly3::term({i, b - i, p.inv.a * i + 1 + j}, row.coeff(j));
        }
    }
    return out;
}

// Proportionality of two nonzero matrices over an integral domain: all
// pairwise cross products of the flattened entries agree.
template <typename P>
bool proportional(const P (&A)[2][2], const P (&B)[2][2]) {
    const P* a[4] = {&A[0][0], &A[0][1], &A[1][0], &A[1][1]};
    const P* b[4] = {&B[0][0], &B[0][1], &B[1][0], &B[1][1]};
    bool a_zero = true, b_zero = true;
    for (int i = 0; i < 4; ++i) {
        if (!a[i]->is_zero()) a_zero = false;
        if (!b[i]->is_zero()) b_zero = false;
    }
    if (a_zero || b_zero) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(*a[i] * *b[j] == *a[j] * *b[i])) return false;
    return true;
}

} // namespace

bool lift_identity_check(long b) {
    if (b < 1) throw RangeViolation("lift_identity_check: b >= 1 required");

    // The geometric sum: (y - z) * sum_{i<=b} y^i z^{b-i} = y^{b+1} - z^{b+1}.
    {
        const Poly2 y = Poly2::var(0), z = Poly2::var(1);
        Poly2 geom;
        for (long i = 0; i <= b; ++i) geom = geom + y.pow(i) * z.pow(b - i);
        if (!((y - z) * geom == y.pow(b + 1) - z.pow(b + 1))) return false;
    }

    // Chart maps of the pull-back along the fibre coordinates (s, t): the
    // pulled-back Schwarzenberger transition, conjugated by the chart maps
    // and the renormalization (1/s, 1) -> (1, s) of the second ruling,
    // agrees projectively with the transition having rows P_i = z^i.
    const Poly2 s = Poly2::var(0), t = Poly2::var(1);
    const Poly2 one = Poly2::constant(Rat(1));

    const Poly2 pst = glueing_at_st(canonical_p_of(make_hat_schwarz(b)));

    Poly2 N[2][2] = {{one, Poly2()}, {pst, t.pow(b + 2)}};
    Poly2 E0[2][2] = {{-one, -t}, {Poly2(), one}};
    Poly2 E1[2][2] = {{-t, one}, {Poly2(), t}};
    SymMat2 Mst = matrix_st(b);

    Poly2 lhs[2][2], rhs[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            lhs[i][j] = N[i][0] * E0[0][j] + N[i][1] * E0[1][j];
            rhs[i][j] = E1[i][0] * Mst.e[0][j] + E1[i][1] * Mst.e[1][j];
        }
    for (int j = 0; j < 2; ++j) rhs[1][j] = rhs[1][j] * s.pow(b);

    return proportional(lhs, rhs);
}

bool hat_blowdown_check(long b) {
    if (b < 1) throw RangeViolation("hat_blowdown_check: b >= 1 required");
    const long m = b + 1;
    const Poly3 y0 = Poly3::var(0), y1 = Poly3::var(1), z = Poly3::var(2);
    const Poly3 zinv = Poly3::var(2, -1);
    const Poly3 one = Poly3::constant(Rat(1));

    const Poly3 P = glueing_poly3(canonical_p_of(make_hat_schwarz(b)));

    // First chart to second chart: the pulled-back transition after the
    // first chart map, against the second chart map after the split
    // transition of bidegree (m, m). They agree up to the factor z.
    Poly3 Mnu[2][2] = {{one, Poly3()}, {P, z.pow(b + 2)}};
    Poly3 Mphi0[2][2] = {{y0 * z - y1, Poly3()}, {-y0.pow(m), one}};
    Poly3 Mphi1[2][2] = {{y0 - y1 * zinv, Poly3()}, {-y1.pow(m), one}};
    Poly3 Mtheta[2][2] = {{one, Poly3()}, {Poly3(), z.pow(m)}};

    Poly3 lhs[2][2], rhs[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            lhs[i][j] = Mnu[i][0] * Mphi0[0][j] + Mnu[i][1] * Mphi0[1][j];
            rhs[i][j] = (Mphi1[i][0] * Mtheta[0][j] + Mphi1[i][1] * Mtheta[1][j]) * z;
        }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(lhs[i][j] == rhs[i][j])) return false;
    return true;
}

bool involution_identity_check(long b) {
    if (b < 2) throw RangeViolation("involution_identity_check: b >= 2 required");
    const Poly2 s = Poly2::var(0), t = Poly2::var(1);
    const Poly2 two = Poly2::constant(Rat(2));

    SymMat2 M = matrix_st(b);
    SymMat2 L, R, plus;
    L.e[0][0] = -(s + t);
    L.e[0][1] = two;
    L.e[1][0] = s * t * Rat(-2);
    L.e[1][1] = s + t;
    R.e[0][0] = s + t;
    R.e[0][1] = s * t * Rat(2);
    R.e[1][0] = -two;
    R.e[1][1] = -(s + t);
    plus.e[0][0] = s.pow(b) + t.pow(b);
    plus.e[0][1] = s.pow(b) * t + s * t.pow(b);
    plus.e[1][0] = s.pow(b + 1) + t.pow(b + 1);
    plus.e[1][1] = s.pow(b + 1) * t + s * t.pow(b + 1);

    SymMat2 want = plus * (s - t);
    return L * M == want && M * R == want;
}

} // namespace p1b
