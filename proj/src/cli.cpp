#include "p1b/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "p1b/bundles.hpp"
#include "p1b/classify.hpp"
#include "p1b/jsonio.hpp"
#include "p1b/links.hpp"
#include "p1b/moduli.hpp"
#include "p1b/schwarzenberger.hpp"
#include "p1b/transitions.hpp"

namespace p1b::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t lo = 0, hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    return s.substr(lo, hi - lo);
}

long parse_long(const std::string& s) {
    const std::string t = strip(s);
    size_t pos = 0;
    long v = 0;
    bool ok = !t.empty();
    if (ok) {
        try {
            v = std::stol(t, &pos);
        } catch (const std::exception&) {
            ok = false;
        }
    }
    if (!ok || pos != t.size()) throw Error("not an integer: '" + t + "'");
    return v;
}

// ---- descriptor flags shared by classify / reduce / graph / jumps ----

struct DescFlags {
    std::string family;
    long a = 0, b = 0, c = 0;
    std::string rows;
};

// Window rows "q,q,...;q,...": row i multiplies y0^i y1^(b-i) z^(a i + 1)
// and its k-th entry is the coefficient of z^k inside the window. The
// result is renormalized, so any representative of the class works.
CanonicalP window_rows(long a, long b, long c, const std::string& rows) {
    if (b < 0) throw RangeViolation("rows: b must be >= 0");
    BiHomogLaurent full(b);
    std::vector<std::string> parts =
        strip(rows).empty() ? std::vector<std::string>{} : split(rows, ';');
    if (static_cast<long>(parts.size()) > b + 1)
        throw RangeViolation("rows: more than b + 1 rows given");
    for (size_t i = 0; i < parts.size(); ++i) {
        const std::string row = strip(parts[i]);
        if (row.empty()) continue;
        LaurentPoly f;
        long k = 0;
        for (const std::string& piece : split(row, ','))
            f = f + LaurentPoly::term(a * static_cast<long>(i) + 1 + k++,
                                      parse_rat(strip(piece)));
        full.set_row(static_cast<long>(i), f);
    }
    return normalize(a, b, c, full);
}

// Rows in the full Laurent grammar "exp:coeff,exp:coeff;...": row i again
// multiplies y0^i y1^(b-i), but each term names its z-exponent outright,
// so glueing data outside the canonical window can be fed in.
BiHomogLaurent laurent_rows(long b, const std::string& rows) {
    if (b < 0) throw RangeViolation("rows: b must be >= 0");
    BiHomogLaurent full(b);
    std::vector<std::string> parts =
        strip(rows).empty() ? std::vector<std::string>{} : split(rows, ';');
    if (static_cast<long>(parts.size()) > b + 1)
        throw RangeViolation("rows: more than b + 1 rows given");
    for (size_t i = 0; i < parts.size(); ++i) {
        const std::string row = strip(parts[i]);
        if (row.empty()) continue;
        LaurentPoly f;
        for (const std::string& piece : split(row, ',')) {
            const auto ec = split(piece, ':');
            if (ec.size() != 2)
                throw Error("row term '" + strip(piece) + "': expected exp:coeff");
            f = f + LaurentPoly::term(parse_long(ec[0]), parse_rat(strip(ec[1])));
        }
        full.set_row(static_cast<long>(i), f);
    }
    return full;
}

BundleDesc desc_of(const DescFlags& f) {
    if (f.family == "DecFa") return make_dec_fa(f.a, f.b, f.c);
    if (f.family == "DecP2") return make_dec_p2(f.b);
    if (f.family == "Umemura") return make_umemura(f.a, f.b, f.c);
    if (f.family == "Schwarz") return make_schwarz(f.b);
    if (f.family == "HatSchwarz") return make_hat_schwarz(f.b);
    if (f.family == "V1") return make_v1(f.b);
    if (f.family == "Raw") return make_raw(window_rows(f.a, f.b, f.c, f.rows));
    throw InvalidDescriptor("unknown family '" + f.family +
                            "' (use DecFa, DecP2, Umemura, Schwarz, HatSchwarz, V1, Raw)");
}

void add_desc_flags(CLI::App* sub, DescFlags& f) {
    sub->add_option("--family", f.family,
                    "family: DecFa, DecP2, Umemura, Schwarz, HatSchwarz, V1, Raw")
        ->required();
    sub->add_option("--a", f.a, "invariant a (families over F_a)");
    sub->add_option("--b", f.b, "invariant b");
    sub->add_option("--c", f.c, "invariant c");
    sub->add_option("--rows", f.rows,
                    "canonical rows for Raw, 'q,q,...;...' (row i multiplies "
                    "y0^i y1^(b-i) z^(a i+1), entry k is the z^k coefficient)");
}

// ---- matrix entry grammar for the jumps subcommand ----
//
// entry  := [term] (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := rational | 'x' ['^' int] | 'y' ['^' int]
//
// x-exponents must be >= 0; y is the fibre coordinate and may carry any
// integer exponent. Example: "y^2 - 3/2*x*y^-1".

XPoly x_monomial(const Rat& coef, long e) {
    std::vector<Rat> cs(static_cast<size_t>(e) + 1, Rat(0));
    cs.back() = coef;
    return XPoly(std::move(cs));
}

LPoly<RatFunc> parse_entry(const std::string& src) {
    size_t i = 0;
    auto fail = [&](const std::string& what) -> Error {
        return Error("matrix entry '" + src + "': " + what);
    };
    auto skip = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto at_digit = [&] {
        return i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]));
    };
    auto read_digits = [&]() -> Int {
        Int v = 0;
        while (at_digit()) v = v * 10 + (src[i++] - '0');
        return v;
    };
    auto read_exponent = [&]() -> long {
        skip();
        bool neg = false;
        if (i < src.size() && (src[i] == '+' || src[i] == '-')) neg = src[i++] == '-';
        skip();
        if (!at_digit()) throw fail("expected an exponent");
        long e = 0;
        while (at_digit()) {
            e = e * 10 + (src[i++] - '0');
            if (e > 1000000) throw fail("exponent out of range");
        }
        return neg ? -e : e;
    };

    LPoly<RatFunc> acc;
    skip();
    if (i == src.size()) return acc;
    bool first = true;
    while (i < src.size()) {
        skip();
        Rat coef = 1;
        if (i < src.size() && (src[i] == '+' || src[i] == '-')) {
            if (src[i] == '-') coef = -1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' between terms");
        }
        first = false;
        long xexp = 0, yexp = 0;
        bool any = false;
        for (;;) {
            skip();
            if (i < src.size() && (src[i] == 'x' || src[i] == 'y')) {
                const char v = src[i++];
                long e = 1;
                skip();
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    e = read_exponent();
                }
                (v == 'x' ? xexp : yexp) += e;
            } else if (at_digit()) {
                const Int num = read_digits();
                Int den = 1;
                skip();
                if (i < src.size() && src[i] == '/') {
                    ++i;
                    skip();
                    if (!at_digit()) throw fail("expected a denominator");
                    den = read_digits();
                    if (den == 0) throw fail("zero denominator");
                }
                coef *= Rat(num, den);
            } else {
                break;
            }
            any = true;
            skip();
            if (i < src.size() && src[i] == '*') ++i;
        }
        if (!any) throw fail("dangling sign");
        if (xexp < 0) throw fail("negative power of x");
        acc = acc + LPoly<RatFunc>::term(yexp, RatFunc(x_monomial(coef, xexp)));
        skip();
    }
    return acc;
}

TransitionMat parse_matrix(const std::string& s) {
    const auto parts = split(s, ';');
    if (parts.size() != 4)
        throw Error("matrix: expected four ';'-separated entries, row major");
    TransitionMat A;
    for (int k = 0; k < 4; ++k) A.e[k / 2][k % 2] = parse_entry(parts[k]);
    return A;
}

// ---- moduli generator flags ----

FaGenerator parse_generator(const std::string& kind, const std::string& mat,
                            const std::string& shear_r) {
    if (kind == "shear") {
        if (strip(shear_r).empty())
            throw IllegalGenerator("shear needs --r with polynomial coefficients");
        LaurentPoly r;
        long k = 0;
        for (const std::string& piece : split(shear_r, ','))
            r = r + LaurentPoly::term(k++, parse_rat(strip(piece)));
        return FaGenerator::shear(r);
    }
    if (kind != "zgl2" && kind != "ygl2")
        throw IllegalGenerator("unknown generator kind '" + kind +
                               "' (use zgl2, ygl2, shear)");
    const auto parts = split(mat, ',');
    if (parts.size() != 4)
        throw IllegalGenerator("--mat needs four ','-separated rationals");
    Rat m[4];
    for (int k = 0; k < 4; ++k) m[k] = parse_rat(strip(parts[k]));
    return kind == "zgl2" ? FaGenerator::zgl2(m[0], m[1], m[2], m[3])
                          : FaGenerator::ygl2(m[0], m[1], m[2], m[3]);
}

// ---- output plumbing ----

void emit(const std::string& doc, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << doc;
        if (doc.empty() || doc.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + out_path + "'");
    f << doc;
    if (doc.empty() || doc.back() != '\n') f << '\n';
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

std::string verdict_lines(const Verdict& v) {
    std::string s;
    s += "  maximal:    " + yesno(v.maximal) + "\n";
    s += "  stiff:      " + yesno(v.stiff) + "\n";
    s += "  superstiff: " + yesno(v.superstiff) + "\n";
    s += "  reason: " + v.reason + "\n";
    return s;
}

Json poly2_json(const Poly2& f, const std::array<std::string, 2>& names) {
    Json terms = Json::array();
    for (const auto& [e, q] : f.terms())
        terms.push_back(Json{{names[0], e[0]}, {names[1], e[1]}, {"coef", rat_json(q)}});
    return terms;
}

Json symmat_json(const SymMat2& m, const std::array<std::string, 2>& names) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) row.push_back(poly2_json(m.e[r][c], names));
        rows.push_back(row);
    }
    return rows;
}

// ---- selftest battery ----

// Substitute u = s + t, v = s*t; carries the (u, v) matrices to the split
// coordinates for the cross-check against matrix_st.
Poly2 to_st(const Poly2& f) {
    const Poly2 u = Poly2::var(0) + Poly2::var(1);
    const Poly2 v = Poly2::var(0) * Poly2::var(1);
    Poly2 acc;
    for (const auto& [e, q] : f.terms())
        acc = acc + u.pow(e[0]) * v.pow(e[1]) * q;
    return acc;
}

bool group_binomial(std::ostream& out) {
    for (long r = 0; r <= 12; ++r)
        for (long p = 0; p <= r; ++p)
            for (long k = 0; k <= p; ++k) {
                const auto [lhs, rhs] = binomial_identity(r, p, k);
                if (lhs != rhs) {
                    out << "    mismatch at (r,p,k) = (" << r << "," << p << "," << k
                        << ")\n";
                    return false;
                }
            }
    return true;
}

bool group_schwarz(long cap, std::ostream& out) {
    // Substitution: schwarz_matrix(b) carried to (s, t) and multiplied by
    // s - t equals the split-coordinate matrix entrywise.
    const Poly2 s = Poly2::var(0), t = Poly2::var(1);
    for (long b = 0; b <= std::min(6L, cap); ++b) {
        const SymMat2 uv = schwarz_matrix(b);
        const SymMat2 st = matrix_st(b);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (to_st(uv.e[r][c]) * (s - t) != st.e[r][c]) {
                    out << "    substitution fails at b = " << b << "\n";
                    return false;
                }
    }
    for (long b = 2; b <= std::min(6L, cap); ++b)
        if (!involution_identity_check(b)) {
            out << "    involution conjugation fails at b = " << b << "\n";
            return false;
        }
    // Parity of h_n on the axis u = 0.
    for (long n = 0; n <= 12; ++n) {
        const Poly2 hn = h_poly(n);
        Poly2 at0;
        for (const auto& [e, q] : hn.terms())
            if (e[0] == 0) at0 = at0 + Poly2::term(e, q);
        Poly2 want;
        if (n % 2 == 1) {
            const Rat sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
            want = Poly2::var(1, (n - 1) / 2) * sign;
        }
        if (at0 != want) {
            out << "    parity of h fails at n = " << n << "\n";
            return false;
        }
    }
    return true;
}

bool group_lift_blowdown(long cap, std::ostream& out) {
    for (long b = 1; b <= std::min(4L, cap); ++b) {
        if (!lift_identity_check(b)) {
            out << "    lift factorization fails at b = " << b << "\n";
            return false;
        }
        if (!hat_blowdown_check(b)) {
            out << "    blow-down factorization fails at b = " << b << "\n";
            return false;
        }
    }
    return true;
}

TruncPoly random_trunc(long r, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    TruncPoly p(r);
    for (long k = 0; k <= r; ++k) p.set_coeff(k, Rat(num(rng), den(rng)));
    return p;
}

bool group_action(long cap, std::ostream& out) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<long> num(-3, 3);
    const long rmax = std::min(8L, cap);
    // Swap: the antidiagonal involution reverses coefficients.
    for (long r = 0; r <= rmax; ++r)
        for (long k = 0; k <= r; ++k) {
            TruncPoly zk(r);
            zk.set_coeff(k, 1);
            if (act_symr(0, 1, 1, 0, zk) != zk.reversed()) {
                out << "    swap formula fails at r = " << r << ", k = " << k << "\n";
                return false;
            }
        }
    // Triangular substitution identity in Q[z]/(z^{r+1}):
    // (beta z + alpha) P(z) delta^r = alpha Phat(w), w = delta z / (beta z + alpha).
    for (int trial = 0; trial < 25; ++trial) {
        const long r = 1 + static_cast<long>(trial % rmax);
        Rat alpha = 0, beta = Rat(num(rng)), delta = 0;
        while (alpha == 0) alpha = Rat(num(rng));
        while (delta == 0) delta = Rat(num(rng));
        const TruncPoly P = random_trunc(r, rng);
        const TruncPoly phat = act_symr(alpha, beta, 0, delta, P);
        TruncPoly lin(r);
        lin.set_coeff(0, alpha);
        lin.set_coeff(1, beta);
        TruncPoly zpoly(r);
        zpoly.set_coeff(1, delta);
        const TruncPoly w = zpoly * trunc_inverse(lin);
        if (lin * P * rat_pow(delta, r) != phat.compose(w) * alpha) {
            out << "    substitution identity fails (trial " << trial << ")\n";
            return false;
        }
    }
    // Group law act(g) act(h) = act(gh) on random invertible pairs.
    for (int trial = 0; trial < 25; ++trial) {
        const long r = 1 + static_cast<long>(trial % rmax);
        Rat g[4], h[4];
        do
            for (auto& e : g) e = Rat(num(rng));
        while (g[0] * g[3] - g[1] * g[2] == 0);
        do
            for (auto& e : h) e = Rat(num(rng));
        while (h[0] * h[3] - h[1] * h[2] == 0);
        const Rat gh[4] = {g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
                           g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3]};
        const TruncPoly P = random_trunc(r, rng);
        const TruncPoly lhs = act_symr(g[0], g[1], g[2], g[3],
                                       act_symr(h[0], h[1], h[2], h[3], P));
        const TruncPoly rhs = act_symr(gh[0], gh[1], gh[2], gh[3], P);
        if (lhs != rhs) {
            out << "    group law fails (trial " << trial << ")\n";
            return false;
        }
    }
    return true;
}

bool group_equivalence(std::ostream& out) {
    std::mt19937_64 rng(0xfacadeULL);
    std::uniform_int_distribution<long> num(-3, 3);
    const long triples[2][3] = {{1, 2, 4}, {0, 2, 4}};
    for (const auto& abc : triples) {
        const long a = abc[0], b = abc[1], c = abc[2];
        BiHomogLaurent seed(b);
        seed.set_row(0, LaurentPoly::term(1, 1) + LaurentPoly::term(2, Rat(1, 2)));
        seed.set_row(1, LaurentPoly::term(a + 1, 2));
        const CanonicalP base = normalize(a, b, c, seed);
        const BiHomogLaurent full = expand(base);
        for (int trial = 0; trial < 20; ++trial) {
            Rat lambda = 0;
            while (lambda == 0) lambda = Rat(num(rng));
            BiHomogLaurent pert = full * lambda;
            for (long i = 0; i <= b; ++i) {
                LaurentPoly junk;
                for (long d = 0; d <= 2; ++d) {
                    junk = junk + LaurentPoly::term(c + d, Rat(num(rng)));
                    junk = junk + LaurentPoly::term(a * i - d, Rat(num(rng)));
                }
                pert.set_row(i, pert.row(i) + junk);
            }
            if (normalize(a, b, c, pert) != base) {
                out << "    perturbed datum normalizes differently at (a,b,c) = ("
                    << a << "," << b << "," << c << ")\n";
                return false;
            }
        }
    }
    return true;
}

bool group_jumps(std::ostream& out) {
    const RatFunc one(Rat(1));
    TransitionMat A;
    A.e[0][0] = LPoly<RatFunc>::term(1, one);
    A.e[0][1] = LPoly<RatFunc>::term(0, RatFunc::x());
    A.e[1][1] = LPoly<RatFunc>::term(-1, one);
    const JumpReport r1 = detect_jumps(A);
    if (r1.m != 0 || r1.n != 0 || r1.jumps.size() != 1 || r1.jumps[0].first != 0 ||
        r1.jumps[0].second != 1) {
        out << "    [[y, x],[0, 1/y]]: wrong report\n";
        return false;
    }
    const RemoveResult rem1 = remove_jumps(A);
    if (rem1.steps.size() != 1 || !rem1.final_report.jumps.empty()) {
        out << "    [[y, x],[0, 1/y]]: removal did not take exactly one step\n";
        return false;
    }
    TransitionMat B = A;
    B.e[0][1] = LPoly<RatFunc>::term(0, RatFunc(x_monomial(1, 2)));
    const RemoveResult rem2 = remove_jumps(B);
    if (rem2.steps.size() != 2 || !rem2.final_report.jumps.empty()) {
        out << "    [[y, x^2],[0, 1/y]]: removal did not take exactly two steps\n";
        return false;
    }
    const CanonicalP hat = canonical_p_of(make_hat_schwarz(1));
    const JumpReport r3 = detect_jumps(restriction_family(hat));
    if (r3.m != 2 || r3.n != 1 || !r3.jumps.empty()) {
        out << "    restriction of the pulled-back Schwarzenberger bundle: wrong type\n";
        return false;
    }
    return true;
}

int run_selftest(std::ostream& out) {
    long cap = 6;
    if (const char* v = std::getenv("P1BL_MAX_DEGREE")) {
        cap = parse_long(v);
        if (cap < 1) throw RangeViolation("P1BL_MAX_DEGREE must be >= 1");
    }
    struct Group {
        std::string name;
        bool ok;
    };
    std::ostringstream detail;
    std::vector<Group> groups;
    groups.push_back({"binomial identity (r <= 12)", group_binomial(detail)});
    groups.push_back({"schwarzenberger matrices", group_schwarz(cap, detail)});
    groups.push_back({"lift and blow-down factorizations", group_lift_blowdown(cap, detail)});
    groups.push_back({"symmetric-power action", group_action(cap, detail)});
    groups.push_back({"normalization soundness", group_equivalence(detail)});
    groups.push_back({"jumping-fibre removal", group_jumps(detail)});
    int failures = 0;
    for (const auto& g : groups) {
        out << (g.ok ? "PASS" : "FAIL") << "  " << g.name << "\n";
        if (!g.ok) ++failures;
    }
    if (!detail.str().empty()) out << detail.str();
    out << (failures == 0 ? "all groups passed"
                          : std::to_string(failures) + " group(s) failed")
        << " (degree cap " << cap << ")\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic classifier for P^1-bundles over the Hirzebruch "
                 "surfaces F_a and over P^2"};
    app.require_subcommand(1);

    bool json = false;
    std::string out_path;
    app.add_flag("--json", json, "machine output: one JSON document on stdout");
    app.add_option("--out", out_path, "write the result document to a file");

    DescFlags cls_d, red_d, gr_d;
    auto* cls = app.add_subcommand("classify", "maximality and stiffness of one class");
    add_desc_flags(cls, cls_d);

    auto* red = app.add_subcommand("reduce", "chain of links to a maximal model");
    add_desc_flags(red, red_d);

    long en_a = 0, en_b = 0, en_c = 0;
    auto* en = app.add_subcommand("enumerate", "all classes in an invariant box");
    en->add_option("--a-max", en_a, "largest a")->required();
    en->add_option("--b-max", en_b, "largest b")->required();
    en->add_option("--c-max", en_c, "largest |c|")->required();

    long md_a = 0, md_b = 0, md_c = 0;
    auto* md = app.add_subcommand("moduli-dim", "dimension of the moduli space M_a^{b,c}");
    md->add_option("--a", md_a, "invariant a")->required();
    md->add_option("--b", md_b, "invariant b")->required();
    md->add_option("--c", md_c, "invariant c")->required();

    long ac_a = 0, ac_b = 0, ac_c = 0;
    std::string ac_rows, ac_gen, ac_mat, ac_r;
    long ac_fixed = -1;
    auto* ac = app.add_subcommand("act", "apply an automorphism generator to a moduli point");
    ac->add_option("--a", ac_a, "invariant a")->required();
    ac->add_option("--b", ac_b, "invariant b")->required();
    ac->add_option("--c", ac_c, "invariant c")->required();
    ac->add_option("--rows", ac_rows, "canonical rows 'q,q,...;...'")->required();
    ac->add_option("--gen", ac_gen, "generator kind: zgl2, ygl2, shear")->required();
    ac->add_option("--mat", ac_mat, "GL2 entries 'alpha,beta,gamma,delta'");
    ac->add_option("--r", ac_r, "shear coefficients 'r0,r1,...' of R(z)");
    ac->add_option("--fixed", ac_fixed,
                   "also test fixedness with this many random generators");

    long no_a = 0, no_b = 0, no_c = 0;
    std::string no_p;
    auto* no = app.add_subcommand("normalize", "canonical form of a glueing polynomial");
    no->add_option("--a", no_a, "invariant a")->required();
    no->add_option("--b", no_b, "invariant b")->required();
    no->add_option("--c", no_c, "invariant c")->required();
    no->add_option("--p", no_p,
                   "rows 'exp:coeff,exp:coeff;...' of the glueing polynomial "
                   "(row i multiplies y0^i y1^(b-i))")
        ->required();

    long sw_b = 0;
    auto* sw = app.add_subcommand("schwarz", "Schwarzenberger transition matrix");
    sw->add_option("--b", sw_b, "index b >= -1")->required();

    DescFlags ju_d;
    std::string ju_entries;
    bool ju_remove = false;
    auto* ju = app.add_subcommand("jumps", "jumping fibres of a y-family over the x-line");
    ju->add_option("--entries", ju_entries,
                   "matrix 'e00;e01;e10;e11' in x, y (e.g. 'y; x; 0; y^-1')");
    add_desc_flags(ju, ju_d);
    ju->get_option("--family")->required(false);
    ju->add_flag("--remove", ju_remove, "apply elementary modifications until jump-free");

    long gr_radius = 2;
    bool gr_dot = false;
    auto* gr = app.add_subcommand("graph", "link graph around a class");
    add_desc_flags(gr, gr_d);
    gr->add_option("--radius", gr_radius, "number of link steps to explore");
    gr->add_flag("--dot", gr_dot, "emit Graphviz DOT instead of text");

    app.add_subcommand("selftest", "run the built-in identity battery");

    // Let --json and --out appear after the subcommand name as well.
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cls)) {
            const BundleDesc d = desc_of(cls_d);
            const Verdict v = verdict(d);
            if (json) {
                Json j = verdict_json(v);
                j["descriptor"] = desc_json(d);
                emit(j.dump(2), out_path, out);
            } else {
                emit(d.str() + "\n" + verdict_lines(v), out_path, out);
            }
        } else if (app.got_subcommand(red)) {
            const BundleDesc d = desc_of(red_d);
            const ReductionResult r = maximal_model(d);
            const Verdict v = verdict(r.target);
            if (json) {
                Json j = reduction_json(r);
                j["source"] = desc_json(d);
                j["verdict"] = verdict_json(v);
                emit(j.dump(2), out_path, out);
            } else {
                std::string s = d.str() + "\n";
                for (const auto& st : r.chain)
                    s += "  -> " + st.target.str() + "  [" + link_kind_name(st.kind) +
                         "] " + st.desc + "\n";
                s += "maximal model: " + r.target.str() + v.glyphs() + "\n";
                s += verdict_lines(v);
                emit(s, out_path, out);
            }
        } else if (app.got_subcommand(en)) {
            const auto table = enumerate_bundles(en_a, en_b, en_c);
            if (json) {
                Json arr = Json::array();
                for (const auto& [d, v] : table)
                    arr.push_back(Json{{"descriptor", desc_json(d)},
                                       {"verdict", verdict_json(v)}});
                emit(Json{{"count", table.size()}, {"classes", arr}}.dump(2), out_path,
                     out);
            } else {
                std::string s;
                for (const auto& [d, v] : table) {
                    std::string line = d.str();
                    if (line.size() < 28) line += std::string(28 - line.size(), ' ');
                    s += line + v.glyphs() + "\n";
                }
                s += std::to_string(table.size()) + " classes (M maximal, S stiff, SS superstiff)\n";
                emit(s, out_path, out);
            }
        } else if (app.got_subcommand(md)) {
            const long dim = dim_moduli(md_a, md_b, md_c);
            if (json)
                emit(Json{{"a", md_a}, {"b", md_b}, {"c", md_c}, {"dim", dim}}.dump(2),
                     out_path, out);
            else
                emit(std::to_string(dim), out_path, out);
        } else if (app.got_subcommand(ac)) {
            const ModuliPoint m =
                ModuliPoint::of(window_rows(ac_a, ac_b, ac_c, ac_rows));
            const FaGenerator g = parse_generator(ac_gen, ac_mat, ac_r);
            const ModuliPoint im = act_on_moduli(g, m);
            if (json) {
                Json j{{"generator", g.str()},
                       {"point", canonical_json(m.p)},
                       {"image", canonical_json(im.p)}};
                if (ac_fixed >= 0)
                    j["fixed"] = is_fixed_diag(ac_a, m, static_cast<int>(ac_fixed));
                emit(j.dump(2), out_path, out);
            } else {
                std::string s = "point:     " + m.p.str() + "\n";
                s += "generator: " + g.str() + "\n";
                s += "image:     " + im.p.str() + "\n";
                if (ac_fixed >= 0)
                    s += std::string("fixed under the relevant group: ") +
                         yesno(is_fixed_diag(ac_a, m, static_cast<int>(ac_fixed))) + "\n";
                emit(s, out_path, out);
            }
        } else if (app.got_subcommand(no)) {
            const CanonicalP p = normalize(no_a, no_b, no_c, laurent_rows(no_b, no_p));
            const auto rec = recognize(p);
            if (json) {
                Json j{{"canonical", canonical_json(p)}};
                j["recognized"] = rec ? desc_json(*rec) : Json(nullptr);
                emit(j.dump(2), out_path, out);
            } else {
                std::string s = "canonical: " + p.str() + "\n";
                if (rec) s += "recognized: " + rec->str() + "\n";
                emit(s, out_path, out);
            }
        } else if (app.got_subcommand(sw)) {
            const SymMat2 uv = schwarz_matrix(sw_b);
            const bool has_st = sw_b >= 0;
            if (json) {
                Json j{{"b", sw_b}, {"uv", symmat_json(uv, {"u", "v"})}};
                if (has_st)
                    j["st_times_s_minus_t"] = symmat_json(matrix_st(sw_b), {"s", "t"});
                emit(j.dump(2), out_path, out);
            } else {
                std::string s = "in (u, v):             " + uv.str({"u", "v"}) + "\n";
                if (has_st)
                    s += "in (s, t), times s - t: " + matrix_st(sw_b).str({"s", "t"}) +
                         "\n";
                emit(s, out_path, out);
            }
        } else if (app.got_subcommand(ju)) {
            TransitionMat A;
            if (!strip(ju_entries).empty()) {
                A = parse_matrix(ju_entries);
            } else if (!ju_d.family.empty()) {
                A = restriction_family(canonical_p_of(desc_of(ju_d)));
            } else {
                throw Error("jumps: give either --entries or a descriptor");
            }
            const JumpReport rep = detect_jumps(A);
            Json j{{"matrix", tmat_json(A)}, {"report", jump_report_json(rep)}};
            std::string s = "matrix: " + A.str() + "\n";
            s += "generic type (" + std::to_string(rep.m) + ", " + std::to_string(rep.n) +
                 ")\n";
            for (const auto& [l, eps] : rep.jumps)
                s += "  jump at x = " + rat_str(l) + ", rises by " + std::to_string(eps) +
                     "\n";
            if (rep.jumps.empty()) s += "  no jumping fibres\n";
            for (const auto& u : rep.unresolved) s += "  unresolved: " + u + "\n";
            if (ju_remove) {
                const RemoveResult rem = remove_jumps(A);
                Json steps = Json::array();
                for (const auto& [l, gap] : rem.steps)
                    steps.push_back(Json{{"lambda", rat_json(l)}, {"gap", gap}});
                j["steps"] = steps;
                j["result"] = tmat_json(rem.matrix);
                j["final"] = jump_report_json(rem.final_report);
                s += std::to_string(rem.steps.size()) + " elementary modification(s)\n";
                for (const auto& [l, gap] : rem.steps)
                    s += "  at x = " + rat_str(l) + " (type gap " + std::to_string(gap) +
                         ")\n";
                s += "jump-free matrix: " + rem.matrix.str() + "\n";
                s += "final type (" + std::to_string(rem.final_report.m) + ", " +
                     std::to_string(rem.final_report.n) + ")\n";
            }
            emit(json ? j.dump(2) : s, out_path, out);
        } else if (app.got_subcommand(gr)) {
            const LinkGraph g = link_graph(desc_of(gr_d), gr_radius);
            if (json) {
                emit(graph_json(g).dump(2), out_path, out);
            } else if (gr_dot) {
                emit(g.to_dot(), out_path, out);
            } else {
                std::string s;
                for (const auto& n : g.nodes) s += n.desc.str() + n.verdict.glyphs() + "\n";
                for (const auto& e : g.edges)
                    s += "  " + e.source.str() + " -> " + e.target.str() + "  [" +
                         link_kind_name(e.kind) + "]\n";
                s += std::to_string(g.nodes.size()) + " classes, " +
                     std::to_string(g.edges.size()) + " links\n";
                emit(s, out_path, out);
            }
        } else { // selftest
            return run_selftest(out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace p1b::cli
