#include "p1b/moduli.hpp"

#include <random>

#include "p1b/errors.hpp"

namespace p1b {

ModuliPoint ModuliPoint::of(CanonicalP p) {
    if (p.inv.b < 1)
        throw RangeViolation("moduli point: b >= 1 required, got " +
                             std::to_string(p.inv.b));
    if (p.inv.c < 2)
        throw RangeViolation("moduli point: c >= 2 required, got " +
                             std::to_string(p.inv.c));
    if (is_decomposable(p))
        throw RangeViolation("moduli point: canonical datum is zero");
    return ModuliPoint{std::move(p)};
}

long dim_moduli(long a, long b, long c) {
    if (a < 0) throw RangeViolation("dim_moduli: a >= 0 required");
    if (b < 1) throw RangeViolation("dim_moduli: b >= 1 required");
    if (c < 2) throw RangeViolation("dim_moduli: c >= 2 required");
    // Largest row whose window is nonempty.
    long d = (a == 0) ? b : (c - 2) / a;
    if (d > b) d = b;
    return (d + 1) * (2 * (c - 1) - a * d) / 2 - 1;
}

TruncPoly act_symr(const Rat& alpha, const Rat& beta, const Rat& gamma,
                   const Rat& delta, const TruncPoly& P) {
    if (alpha * delta - beta * gamma == 0)
        throw SingularMatrix("act_symr: determinant vanishes");
    const long r = P.bound();
    if (r < 0) return P;

    std::vector<Rat> pa(static_cast<size_t>(r + 1)), pb(static_cast<size_t>(r + 1)),
        pc(static_cast<size_t>(r + 1)), pd(static_cast<size_t>(r + 1));
    pa[0] = pb[0] = pc[0] = pd[0] = Rat(1);
    for (long k = 1; k <= r; ++k) {
        pa[static_cast<size_t>(k)] = pa[static_cast<size_t>(k - 1)] * alpha;
        pb[static_cast<size_t>(k)] = pb[static_cast<size_t>(k - 1)] * beta;
        pc[static_cast<size_t>(k)] = pc[static_cast<size_t>(k - 1)] * gamma;
        pd[static_cast<size_t>(k)] = pd[static_cast<size_t>(k - 1)] * delta;
    }

    // Homogenize z^i to C(r,i) s^i t^{r-i}, substitute s -> alpha s + gamma t,
    // t -> beta s + delta t, and read the s^k t^{r-k} coefficients back off.
    std::vector<Rat> q(static_cast<size_t>(r + 1), Rat(0));
    for (long i = 0; i <= r; ++i) {
        const Rat& pi = P.coeff(i);
        if (pi == 0) continue;
        Rat w = pi * Rat(binomial(r, i));
        for (long u = 0; u <= i; ++u) {
            for (long v = 0; v <= r - i; ++v) {
                Rat term = w * Rat(binomial(i, u) * binomial(r - i, v)) *
                           pa[static_cast<size_t>(u)] * pc[static_cast<size_t>(i - u)] *
                           pb[static_cast<size_t>(v)] * pd[static_cast<size_t>(r - i - v)];
                q[static_cast<size_t>(u + v)] += term;
            }
        }
    }

    TruncPoly out(r);
    for (long k = 0; k <= r; ++k)
        out.set_coeff(k, q[static_cast<size_t>(k)] / Rat(binomial(r, k)));
    return out;
}

FaGenerator FaGenerator::zgl2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (a * d - b * c == 0) throw SingularMatrix("zgl2 generator: determinant vanishes");
    return FaGenerator{GenKind::ZGl2, a, b, c, d, {}};
}

FaGenerator FaGenerator::ygl2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (a * d - b * c == 0) throw SingularMatrix("ygl2 generator: determinant vanishes");
    return FaGenerator{GenKind::YGl2, a, b, c, d, {}};
}

FaGenerator FaGenerator::shear(LaurentPoly r) {
    if (!r.is_zero() && r.min_exp() < 0)
        throw IllegalGenerator("shear generator: negative exponent");
    return FaGenerator{GenKind::Shear, Rat(0), Rat(0), Rat(0), Rat(0), std::move(r)};
}

std::string FaGenerator::str() const {
    switch (kind) {
        case GenKind::ZGl2:
        case GenKind::YGl2: {
            std::string name = kind == GenKind::ZGl2 ? "ZGl2" : "YGl2";
            return name + "[" + rat_str(alpha) + "," + rat_str(beta) + ";" +
                   rat_str(gamma) + "," + rat_str(delta) + "]";
        }
        case GenKind::Shear:
            return "Shear[" + r.str() + "]";
    }
    return "?";
}

namespace {

// Rebuild the canonical representative from modified rows: expanding and
// renormalizing reuses the window projection and leading-1 scaling.
ModuliPoint renormalized(const NumericalInvariants& inv, std::vector<TruncPoly> rows) {
    CanonicalP tmp{inv, std::move(rows)};
    return ModuliPoint::of(normalize(inv.a, inv.b, inv.c, expand(tmp)));
}

ModuliPoint renormalized(const NumericalInvariants& inv, const BiHomogLaurent& full) {
    return ModuliPoint::of(normalize(inv.a, inv.b, inv.c, full));
}

} // namespace

ModuliPoint act_on_moduli(const FaGenerator& g, const ModuliPoint& m) {
    const NumericalInvariants inv = m.p.inv;

    switch (g.kind) {
        case GenKind::ZGl2: {
            std::vector<TruncPoly> rows;
            rows.reserve(m.p.rows.size());
            for (const auto& row : m.p.rows)
                rows.push_back(act_symr(g.alpha, g.beta, g.gamma, g.delta, row));
            return renormalized(inv, std::move(rows));
        }
        case GenKind::YGl2: {
            if (inv.a != 0)
                throw IllegalGenerator("y-side GL2 moves exist only over F_0");
            // Precompose with the inverse matrix; the determinant factor is
            // absorbed by the leading-1 scaling, so the adjugate suffices.
            BiHomogLaurent full = subst_y_affine(
                expand(m.p), LaurentPoly::constant(g.delta),
                LaurentPoly::constant(-g.beta), LaurentPoly::constant(-g.gamma),
                LaurentPoly::constant(g.alpha));
            return renormalized(inv, full);
        }
        case GenKind::Shear: {
            if (inv.a < 1)
                throw IllegalGenerator("shear moves exist only over F_a with a >= 1");
            if (!g.r.is_zero() && (g.r.max_exp() > inv.a || g.r.min_exp() < 0))
                throw IllegalGenerator("shear generator: exponents must lie in [0, a]");
            // y1 -> y1 - y0*R is the inverse of the shear by R.
            BiHomogLaurent full = subst_y_shear(expand(m.p), g.r * Rat(-1));
            return renormalized(inv, full);
        }
    }
    throw Error("act_on_moduli: unreachable generator kind");
}

namespace {

bool fixed_by(const ModuliPoint& m, const FaGenerator& g) {
    return act_on_moduli(g, m) == m;
}

// For a = 0 the relevant group is the diagonal PGL2 acting on both rulings
// at once, so the z-side and y-side moves are applied as a pair.
bool fixed_by_pair(const ModuliPoint& m, const Rat& al, const Rat& be,
                   const Rat& ga, const Rat& de) {
    ModuliPoint img = act_on_moduli(FaGenerator::zgl2(al, be, ga, de), m);
    img = act_on_moduli(FaGenerator::ygl2(al, be, ga, de), img);
    return img == m;
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    return Rat(num(rng)) / den(rng);
}

} // namespace

bool is_fixed_diag(long a, const ModuliPoint& m, int trials) {
    if (a != m.p.inv.a)
        throw RangeViolation("is_fixed_diag: base parameter disagrees with the point");

    struct G2 {
        int al, be, ga, de;
    };
    static const G2 structured[] = {
        {0, 1, 1, 0}, {2, 0, 0, 1}, {3, 0, 0, 1},
        {5, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1},
    };

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);

    if (a == 0) {
        for (const auto& g : structured)
            if (!fixed_by_pair(m, Rat(g.al), Rat(g.be), Rat(g.ga), Rat(g.de)))
                return false;
        for (int t = 0; t < trials; ++t) {
            Rat al, be, ga, de;
            do {
                al = random_rat(rng);
                be = random_rat(rng);
                ga = random_rat(rng);
                de = random_rat(rng);
            } while (al * de - be * ga == 0);
            if (!fixed_by_pair(m, al, be, ga, de)) return false;
        }
        return true;
    }

    for (const auto& g : structured)
        if (!fixed_by(m, FaGenerator::zgl2(Rat(g.al), Rat(g.be), Rat(g.ga), Rat(g.de))))
            return false;

    std::vector<LaurentPoly> shears;
    shears.push_back(LaurentPoly::constant(Rat(1)));
    shears.push_back(LaurentPoly::term(a, Rat(1)));
    if (a >= 2) shears.push_back(LaurentPoly::term(1, Rat(1)));
    shears.push_back(LaurentPoly::constant(Rat(1)) + LaurentPoly::term(a, Rat(2)));
    for (const auto& r : shears)
        if (!fixed_by(m, FaGenerator::shear(r))) return false;

    for (int t = 0; t < trials; ++t) {
        Rat al, be, ga, de;
        do {
            al = random_rat(rng);
            be = random_rat(rng);
            ga = random_rat(rng);
            de = random_rat(rng);
        } while (al * de - be * ga == 0);
        if (!fixed_by(m, FaGenerator::zgl2(al, be, ga, de))) return false;

        LaurentPoly r;
        for (long j = 0; j <= a; ++j) r.set_coeff(j, random_rat(rng));
        if (!fixed_by(m, FaGenerator::shear(r))) return false;
    }
    return true;
}

} // namespace p1b
