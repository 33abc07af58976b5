#include "p1b/transitions.hpp"

#include <algorithm>

namespace p1b {

namespace {

// lcm of denominators over a whole column pair of (B, C), then the gcd of
// the resulting numerator polynomials. Dividing by it keeps the pair
// polynomial and removes every common (x - l) factor, which is what the
// jump analysis needs: a column of B and C never vanishes jointly.
void clear_column_pair(TransitionMat& B, TransitionMat& C, int j) {
    XPoly lcm = XPoly::constant(Rat(1));
    auto fold_lcm = [&lcm](const LPoly<RatFunc>& f) {
        for (const auto& [e, c] : f.terms()) {
            (void)e;
            XPoly g = xpoly_gcd(lcm, c.den());
            lcm = lcm.divmod(g).first * c.den();
        }
    };
    for (int i = 0; i < 2; ++i) {
        fold_lcm(B.e[i][j]);
        fold_lcm(C.e[i][j]);
    }
    RatFunc mul{lcm};
    for (int i = 0; i < 2; ++i) {
        B.e[i][j] = B.e[i][j].scaled(mul);
        C.e[i][j] = C.e[i][j].scaled(mul);
    }

    XPoly content;
    auto fold_gcd = [&content](const LPoly<RatFunc>& f) {
        for (const auto& [e, c] : f.terms()) {
            (void)e;
            if (!c.is_polynomial())
                throw Error("clear_column_pair: entry still rational (bug)");
            content = xpoly_gcd(content, c.num());
        }
    };
    for (int i = 0; i < 2; ++i) {
        fold_gcd(B.e[i][j]);
        fold_gcd(C.e[i][j]);
    }
    if (content.degree() >= 1) {
        RatFunc div = RatFunc{XPoly::constant(Rat(1))} / RatFunc{content};
        for (int i = 0; i < 2; ++i) {
            B.e[i][j] = B.e[i][j].scaled(div);
            C.e[i][j] = C.e[i][j].scaled(div);
        }
    }
}

XPoly det_b_poly(const TransitionMat& B) {
    LPoly<RatFunc> d = B.det();
    if (d.is_zero()) throw NotInvertible("det(B) vanished (bug)");
    if (!d.is_monomial() || d.min_exp() != 0)
        throw Error("det(B) is not constant in y (bug)");
    RatFunc v = d.coeff(0);
    if (!v.is_polynomial())
        throw Error("det(B) is not polynomial after clearing (bug)");
    return v.num();
}

SplitData finish_split(SplitResult<RatFunc> raw) {
    SplitData out;
    out.a_norm = std::move(raw.a_norm);
    out.b = std::move(raw.b);
    out.c = std::move(raw.c);
    out.m = raw.m;
    out.n = raw.n;
    clear_column_pair(out.b, out.c, 0);
    clear_column_pair(out.b, out.c, 1);
    out.det_b = det_b_poly(out.b);
    return out;
}

// Divide column j of both factors by (x - l); every coefficient must
// vanish at l for this to be exact.
void divide_column_pair(TransitionMat& B, TransitionMat& C, int j, const Rat& lambda) {
    XPoly lin = XPoly::linear_root(lambda);
    auto divide = [&lin](LPoly<RatFunc>& f) {
        LPoly<RatFunc> r;
        for (const auto& [e, c] : f.terms()) {
            if (!c.is_polynomial())
                throw Error("divide_column_pair: rational entry (bug)");
            auto [q, rem] = c.num().divmod(lin);
            if (!rem.is_zero())
                throw Error("divide_column_pair: inexact division (bug)");
            r.set_coeff(e, RatFunc{q});
        }
        f = r;
    };
    for (int i = 0; i < 2; ++i) {
        divide(B.e[i][j]);
        divide(C.e[i][j]);
    }
}

bool column_vanishes(const Mat2<Rat>& m, int j) {
    return m.e[0][j].is_zero() && m.e[1][j].is_zero();
}

enum class RootClass { Reduced, HonestJump, Unresolvable };

// Analyze one rational root l of det(B) in the frame where the fibre
// matrix over l is diagonal. Spurious roots (fibre type does not rise)
// always admit one of the two-sided reductions dividing the column pair
// by (x - l); honest jumps are left alone.
RootClass try_reduce_at(SplitData& S, const Rat& lambda) {
    Mat2<Rat> a_l;
    try {
        a_l = mat2_eval_x(S.a_norm, lambda);
    } catch (const Error&) {
        return RootClass::Unresolvable;
    }
    SplitResult<Rat> one = birkhoff_split_mat(a_l);
    long eps = one.m - S.m;
    if (eps > 0) return RootClass::HonestJump;

    long b = S.m - S.n;

    // Effective one-variable factors with Beff^{-1} * a_l * C0 = D exactly.
    Mat2<Rat> beff = a_l * one.c;
    {
        Mat2<Rat> dinv = diag_mat<Rat>(-one.m, -one.n);
        // D^{-1} applied on the right swaps nothing, just shifts exponents.
        beff = beff * dinv;
    }
    TransitionMat bp = mat2_promote(mat2_inverse_unit(beff)) * S.b;
    TransitionMat cp = mat2_promote(mat2_inverse_unit(one.c)) * S.c;

    Mat2<Rat> beta = mat2_eval_x(bp, lambda);

    int col = -1;
    if (column_vanishes(beta, 0)) col = 0;
    else if (column_vanishes(beta, 1)) col = 1;

    if (col < 0 && eps < 0) {
        // Window arithmetic forces the second column of beta to vanish
        // when the specialized type drops; reaching here is a bug.
        throw Error("try_reduce_at: negative eps without zero column (bug)");
    }

    if (col < 0 && b == 0) {
        // beta is a constant singular matrix; kill its kernel column.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!beta.e[i][j].is_zero() &&
                    (!beta.e[i][j].is_monomial() || beta.e[i][j].min_exp() != 0))
                    throw Error("try_reduce_at: nonconstant beta at b = 0 (bug)");
        Rat b00 = beta.e[0][0].coeff(0), b01 = beta.e[0][1].coeff(0);
        Rat b10 = beta.e[1][0].coeff(0), b11 = beta.e[1][1].coeff(0);
        // Kernel vector (r1, r2): beta is singular, so one nonzero row
        // determines it and the other row follows.
        Rat r1, r2;
        if (b00 != 0 || b01 != 0) {
            r1 = -b01;
            r2 = b00;
        } else {
            r1 = -b11;
            r2 = b10;
        }
        if (r1 == 0 && r2 == 0) throw Error("try_reduce_at: zero kernel (bug)");
        // Complete (r1, r2) to a constant invertible matrix.
        Mat2<Rat> R;
        R.e[0][0] = LPoly<Rat>::constant(r1);
        R.e[1][0] = LPoly<Rat>::constant(r2);
        if (r1 != 0) {
            R.e[0][1] = LPoly<Rat>::constant(Rat(0));
            R.e[1][1] = LPoly<Rat>::constant(Rat(1));
        } else {
            R.e[0][1] = LPoly<Rat>::constant(Rat(1));
            R.e[1][1] = LPoly<Rat>::constant(Rat(0));
        }
        TransitionMat Rp = mat2_promote(R);
        bp = bp * Rp;
        cp = cp * Rp;
        col = 0;
    } else if (col < 0) {
        // eps = 0, b > 0: beta12 = 0 by window arithmetic; det beta = 0
        // leaves beta11 * beta22 = 0.
        if (!beta.e[0][1].is_zero())
            throw Error("try_reduce_at: beta12 nonzero at eps = 0, b > 0 (bug)");
        if (beta.e[1][1].is_zero()) {
            col = 1;
        } else {
            if (!beta.e[0][0].is_zero())
                throw Error("try_reduce_at: beta11 nonzero with beta22 nonzero (bug)");
            if (!beta.e[1][1].is_monomial() || beta.e[1][1].min_exp() != 0)
                throw Error("try_reduce_at: beta22 not constant (bug)");
            Rat b22 = beta.e[1][1].coeff(0);
            LPoly<Rat> b21 = beta.e[1][0];
            Mat2<Rat> R;
            R.e[0][0] = LPoly<Rat>::constant(b22);
            R.e[0][1] = LPoly<Rat>();
            R.e[1][0] = -b21;
            R.e[1][1] = LPoly<Rat>::constant(Rat(1));
            // R' = D^{-1} R D shifts the lower-left entry by y^{m-n}.
            Mat2<Rat> Rp2 = R;
            Rp2.e[1][0] = -(b21 * LPoly<Rat>::term(b, Rat(1)));
            bp = bp * mat2_promote(R);
            cp = cp * mat2_promote(Rp2);
            col = 0;
        }
    }

    // The matching column of C must vanish at l as well; then the pair
    // division is exact and deg det(B) drops by one.
    Mat2<Rat> gamma = mat2_eval_x(cp, lambda);
    Mat2<Rat> beta2 = mat2_eval_x(bp, lambda);
    if (!column_vanishes(beta2, col) || !column_vanishes(gamma, col))
        throw Error("try_reduce_at: column does not vanish jointly (bug)");
    divide_column_pair(bp, cp, col, lambda);

    // Undo the frame change so B * D = a_norm * C keeps holding; without
    // this the next root's window arithmetic runs against the wrong frame.
    bp = mat2_promote(beff) * bp;
    cp = mat2_promote(one.c) * cp;
    clear_column_pair(bp, cp, 0);
    clear_column_pair(bp, cp, 1);

    S.b = std::move(bp);
    S.c = std::move(cp);
    S.det_b = det_b_poly(S.b);
    return RootClass::Reduced;
}

void minimize_split(SplitData& S) {
    const int kGuard = 4096;
    int steps = 0;
    bool changed = true;
    while (changed) {
        if (++steps > kGuard) throw Error("minimize_split: no convergence (bug)");
        changed = false;
        RationalRoots rr = rational_roots(S.det_b);
        for (const auto& [root, mult] : rr.roots) {
            (void)mult;
            if (try_reduce_at(S, root) == RootClass::Reduced) {
                changed = true;
                break; // det_b changed, start over with fresh roots
            }
        }
    }
}

} // namespace

SplitData birkhoff_split(const TransitionMat& A) {
    return finish_split(birkhoff_split_mat(A));
}

SplitResult<Rat> birkhoff_split_q(const Mat2<Rat>& A) {
    return birkhoff_split_mat(A);
}

JumpReport detect_jumps(const TransitionMat& A) {
    SplitData S = birkhoff_split(A);
    minimize_split(S);

    JumpReport rep;
    rep.m = S.m;
    rep.n = S.n;
    rep.det_b = S.det_b;

    RationalRoots rr = rational_roots(S.det_b);
    for (const auto& [root, mult] : rr.roots) {
        (void)mult;
        Mat2<Rat> a_l;
        try {
            a_l = mat2_eval_x(S.a_norm, root);
        } catch (const Error&) {
            rep.unresolved.push_back("x = " + rat_str(root) +
                                     " (fibre matrix not evaluable)");
            continue;
        }
        SplitResult<Rat> one = birkhoff_split_mat(a_l);
        long bt = one.m - one.n;
        long b = S.m - S.n;
        if ((bt - b) % 2 != 0 || bt <= b)
            throw Error("detect_jumps: non-jump root survived minimization (bug)");
        rep.jumps.push_back({root, (bt - b) / 2});
    }

    for (const auto& [factor, mult] : squarefree_factors(rr.cofactor)) {
        (void)mult;
        rep.unresolved.push_back(factor.str());
    }
    return rep;
}

TransitionMat elementary_modification(const TransitionMat& A, const Rat& lambda) {
    Mat2<Rat> a_l;
    try {
        a_l = mat2_eval_x(A, lambda);
    } catch (const Error& e) {
        throw NotNormalizedAtLambda(std::string("elementary_modification: ") + e.what());
    }

    TransitionMat work = A;
    bool diag_fast = a_l.e[0][1].is_zero() && a_l.e[1][0].is_zero() &&
                     a_l.e[0][0].is_monomial() && a_l.e[1][1].is_monomial() &&
                     a_l.e[0][0].min_exp() >= a_l.e[1][1].min_exp();
    if (!diag_fast) {
        SplitResult<Rat> one = birkhoff_split_mat(a_l);
        Mat2<Rat> beff = a_l * one.c * diag_mat<Rat>(-one.m, -one.n);
        work = mat2_promote(mat2_inverse_unit(beff)) * A * mat2_promote(one.c);
        Mat2<Rat> check = mat2_eval_x(work, lambda);
        if (!check.e[0][1].is_zero() || !check.e[1][0].is_zero())
            throw NotNormalizedAtLambda(
                "elementary_modification: fibre matrix not diagonal at x = " +
                rat_str(lambda));
    }

    RatFunc lin{XPoly::linear_root(lambda)};
    TransitionMat out = work;
    LPoly<RatFunc> res;
    for (const auto& [e, c] : work.e[0][1].terms()) res.set_coeff(e, c / lin);
    out.e[0][1] = res;
    res = LPoly<RatFunc>();
    for (const auto& [e, c] : work.e[1][0].terms()) res.set_coeff(e, c * lin);
    out.e[1][0] = res;
    return out;
}

RemoveResult remove_jumps(const TransitionMat& A) {
    RemoveResult out;
    out.matrix = A;
    const int kGuard = 4096;
    for (int i = 0;; ++i) {
        if (i > kGuard) throw Error("remove_jumps: no convergence (bug)");
        JumpReport rep = detect_jumps(out.matrix);
        if (!rep.unresolved.empty()) {
            std::string msg = "remove_jumps: unresolved det(B) factors:";
            for (const auto& s : rep.unresolved) msg += " [" + s + "]";
            throw UnresolvedJump(msg);
        }
        if (rep.jumps.empty()) {
            out.final_report = rep;
            return out;
        }
        const auto& [lambda, eps] = rep.jumps.front();
        out.steps.push_back({lambda, (rep.m - rep.n) + 2 * eps});
        out.matrix = elementary_modification(out.matrix, lambda);
    }
}

TransitionOf transition_of(const CanonicalP& p) {
    return TransitionOf{p.inv.c, expand(p)};
}

TransitionMat restriction_family(const CanonicalP& p) {
    if (p.inv.a != 0)
        throw RangeViolation("restriction_family: defined for a = 0 only");
    BiHomogLaurent P = expand(p);
    const long b = p.inv.b;

    TransitionMat A;
    A.e[0][0] = LPoly<RatFunc>::one();
    A.e[1][1] = LPoly<RatFunc>::term(p.inv.c, RatFunc(Rat(1)));
    // P at the y-point [1 : x]: row i contributes x^{b-i} * P_i(y) y^{1}.
    LPoly<RatFunc> q;
    for (long i = 0; i <= b; ++i) {
        if (P.row(i).is_zero()) continue;
        std::vector<Rat> mono(static_cast<size_t>(b - i), Rat(0));
        mono.push_back(Rat(1));
        RatFunc xpow{XPoly(std::move(mono))};
        for (const auto& [e, coef] : P.row(i).terms())
            q.set_coeff(e, q.coeff(e) + xpow * RatFunc(coef));
    }
    A.e[1][0] = q;
    return A;
}

} // namespace p1b
