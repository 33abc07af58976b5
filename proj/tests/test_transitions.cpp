#include "doctest.h"

#include "oracles.hpp"
#include "p1b/bundles.hpp"
#include "p1b/transitions.hpp"

using namespace p1b;

namespace {

const RatFunc kOne{Rat(1)};

LPoly<RatFunc> yterm(long e, RatFunc c = kOne) { return LPoly<RatFunc>::term(e, std::move(c)); }

// The y-upper-triangular worked example [[y, f(x)], [0, 1/y]].
TransitionMat upper(const RatFunc& f) {
    TransitionMat A;
    A.e[0][0] = yterm(1);
    A.e[0][1] = LPoly<RatFunc>::term(0, f);
    A.e[1][1] = yterm(-1);
    return A;
}

bool factorization_holds(const SplitData& s) {
    return s.b * diag_mat<RatFunc>(s.m, s.n) == s.a_norm * s.c;
}

} // namespace

TEST_CASE("splitting a diagonal matrix is trivial") {
    TransitionMat A;
    A.e[0][0] = yterm(1);
    A.e[1][1] = yterm(0);
    const SplitData s = birkhoff_split(A);
    CHECK(s.m == 1);
    CHECK(s.n == 0);
    CHECK(s.b == Mat2<RatFunc>::identity());
    CHECK(s.c == Mat2<RatFunc>::identity());
    CHECK(factorization_holds(s));
}

TEST_CASE("splitting sorts the diagonal exponents") {
    TransitionMat A;
    A.e[0][0] = yterm(-2);
    A.e[1][1] = yterm(3);
    const SplitData s = birkhoff_split(A);
    CHECK(s.m == 3);
    CHECK(s.n == -2);
    CHECK(factorization_holds(s));
}

TEST_CASE("generic splitting of the worked upper-triangular matrix") {
    const SplitData s = birkhoff_split(upper(RatFunc::x()));
    CHECK(s.m == 0);
    CHECK(s.n == 0);
    CHECK(factorization_holds(s));
    // the lone jump shows up as the root of det(B)
    CHECK_FALSE(s.det_b.is_zero());
    CHECK(s.det_b.eval(Rat(0)) == Rat(0));
    CHECK(s.det_b.eval(Rat(1)) != Rat(0));
}

TEST_CASE("split rejects non-unit determinants") {
    TransitionMat A;
    A.e[0][0] = yterm(0);
    A.e[0][1] = yterm(1);
    A.e[1][0] = yterm(-1);
    A.e[1][1] = yterm(0);
    // det = 1 - y * y^-1 = 0
    CHECK_THROWS_AS(birkhoff_split(A), NotInvertible);

    TransitionMat C;
    C.e[0][0] = yterm(1) + yterm(0);
    C.e[1][1] = yterm(0);
    // det = y + 1 is not of the form mu * y^d
    CHECK_THROWS_AS(birkhoff_split(C), NonUnitDeterminant);
}

TEST_CASE("splitting type agrees with the section-dimension oracle") {
    // [[1, 0], [x y, y^4]]: constant type (3,1), despite m - n > deg gaps.
    TransitionMat A;
    A.e[0][0] = yterm(0);
    A.e[1][0] = yterm(1, RatFunc::x());
    A.e[1][1] = yterm(4);
    const SplitData s = birkhoff_split(A);
    CHECK(s.m == 3);
    CHECK(s.n == 1);
    CHECK(factorization_holds(s));
    for (const Rat& x : {Rat(1), Rat(-2), Rat(1, 3)})
        CHECK(oracle::splitting_type(mat2_eval_x(A, x)) == std::pair<long, long>(3, 1));
    // at x = 0 the matrix is diag(1, y^4) with type (4, 0): the fibre gap
    // rises from 2 to 4, an honest jump with eps = 1
    CHECK(oracle::splitting_type(mat2_eval_x(A, Rat(0))) == std::pair<long, long>(4, 0));

    const JumpReport rep = detect_jumps(A);
    CHECK(rep.m == 3);
    CHECK(rep.n == 1);
    REQUIRE(rep.jumps.size() == 1);
    CHECK(rep.jumps[0].first == Rat(0));
    CHECK(rep.jumps[0].second == 1);
    CHECK(rep.unresolved.empty());
}

TEST_CASE("jump detection on the worked examples") {
    SUBCASE("diagonal matrices have no jumps") {
        TransitionMat A;
        A.e[0][0] = yterm(1);
        A.e[1][1] = yterm(0);
        const JumpReport rep = detect_jumps(A);
        CHECK(rep.m == 1);
        CHECK(rep.n == 0);
        CHECK(rep.jumps.empty());
        CHECK(rep.unresolved.empty());
    }

    SUBCASE("[[y, x],[0, 1/y]] jumps at the origin") {
        const JumpReport rep = detect_jumps(upper(RatFunc::x()));
        CHECK(rep.m == 0);
        CHECK(rep.n == 0);
        REQUIRE(rep.jumps.size() == 1);
        CHECK(rep.jumps[0].first == Rat(0));
        CHECK(rep.jumps[0].second == 1);
        CHECK(rep.unresolved.empty());
        // specialization at the jump really is diag(y, 1/y)
        CHECK(oracle::splitting_type(mat2_eval_x(upper(RatFunc::x()), Rat(0))) ==
              std::pair<long, long>(1, -1));
    }

    SUBCASE("a translated parameter translates the jump") {
        const RatFunc shifted = RatFunc::x() - RatFunc(Rat(3));
        const JumpReport rep = detect_jumps(upper(shifted));
        REQUIRE(rep.jumps.size() == 1);
        CHECK(rep.jumps[0].first == Rat(3));
        CHECK(rep.jumps[0].second == 1);
    }
}

TEST_CASE("elementary modification peels one jump layer") {
    const TransitionMat A = upper(RatFunc::x());
    const TransitionMat A1 = elementary_modification(A, Rat(0));
    CHECK(A1 == upper(RatFunc(Rat(1))));

    SUBCASE("diagonal matrices are unchanged") {
        TransitionMat D;
        D.e[0][0] = yterm(2);
        D.e[1][1] = yterm(0);
        CHECK(elementary_modification(D, Rat(0)) == D);
    }

    SUBCASE("a quadratic coefficient needs two layers") {
        const TransitionMat B = upper(RatFunc::x() * RatFunc::x());
        const TransitionMat B1 = elementary_modification(B, Rat(0));
        CHECK(B1 == upper(RatFunc::x()));
        CHECK(elementary_modification(B1, Rat(0)) == upper(RatFunc(Rat(1))));
    }
}

TEST_CASE("jump removal loop") {
    SUBCASE("already jump-free input is returned as is") {
        TransitionMat D;
        D.e[0][0] = yterm(1);
        D.e[1][1] = yterm(0);
        const RemoveResult r = remove_jumps(D);
        CHECK(r.steps.empty());
        CHECK(r.matrix == D);
        CHECK(r.final_report.jumps.empty());
    }

    SUBCASE("one jump, one step") {
        const RemoveResult r = remove_jumps(upper(RatFunc::x()));
        REQUIRE(r.steps.size() == 1);
        CHECK(r.steps[0].first == Rat(0));
        CHECK(r.steps[0].second == 2); // fibre index at the jump before peeling
        CHECK(r.final_report.jumps.empty());
        CHECK(r.matrix == upper(RatFunc(Rat(1))));
    }

    SUBCASE("a double jump takes exactly two steps") {
        const RemoveResult r = remove_jumps(upper(RatFunc::x() * RatFunc::x()));
        REQUIRE(r.steps.size() == 2);
        CHECK(r.steps[0] == std::pair<Rat, long>(Rat(0), 2));
        CHECK(r.steps[1] == std::pair<Rat, long>(Rat(0), 2));
        CHECK(r.final_report.jumps.empty());
    }

    SUBCASE("deg det(B) strictly decreases at every step") {
        TransitionMat A = upper(RatFunc::x() * (RatFunc::x() - RatFunc(Rat(2))));
        long deg = detect_jumps(A).det_b.degree();
        while (true) {
            const JumpReport rep = detect_jumps(A);
            if (rep.jumps.empty()) break;
            A = elementary_modification(A, rep.jumps[0].first);
            const long next = detect_jumps(A).det_b.degree();
            CHECK(next < deg);
            deg = next;
        }
    }
}

TEST_CASE("symbolic glueing data of named families") {
    SUBCASE("decomposable data glue by the diagonal") {
        const TransitionOf t = transition_of(canonical_p_of(make_dec_fa(1, 1, 0)));
        CHECK(t.c == 0);
        CHECK(t.P.is_zero());
    }

    SUBCASE("Umemura datum") {
        const TransitionOf t = transition_of(canonical_p_of(make_umemura(1, 1, 3)));
        CHECK(t.c == 3);
        CHECK(t.P.row(0).is_zero());
        CHECK(t.P.row(1) == LaurentPoly::term(2, Rat(1)));
    }

    SUBCASE("pulled-back Schwarzenberger datum") {
        const TransitionOf t = transition_of(canonical_p_of(make_hat_schwarz(1)));
        CHECK(t.c == 3);
        CHECK(t.P.row(0) == LaurentPoly::term(1, Rat(1)));
        CHECK(t.P.row(1) == LaurentPoly::term(2, Rat(1)));
    }

    SUBCASE("round trip through normalize") {
        const CanonicalP p = canonical_p_of(make_hat_schwarz(2));
        const TransitionOf t = transition_of(p);
        CHECK(normalize(p.inv.a, p.inv.b, p.inv.c, t.P) == p);
    }
}

TEST_CASE("restriction families over the x-line") {
    SUBCASE("only defined over F_0") {
        CHECK_THROWS_AS(restriction_family(canonical_p_of(make_umemura(1, 1, 3))),
                        RangeViolation);
    }

    SUBCASE("pulled-back Schwarzenberger restrictions have constant gap b") {
        for (long b = 1; b <= 4; ++b) {
            const TransitionMat A =
                restriction_family(canonical_p_of(make_hat_schwarz(b)));
            const JumpReport rep = detect_jumps(A);
            CHECK(rep.m == b + 1);
            CHECK(rep.n == 1);
            CHECK(rep.jumps.empty());
            CHECK(rep.unresolved.empty());
            if (b <= 2)
                for (const Rat& x : {Rat(0), Rat(1), Rat(-1, 2)})
                    CHECK(oracle::splitting_type(mat2_eval_x(A, x)) ==
                          std::pair<long, long>(b + 1, 1));
        }
    }

    SUBCASE("the literal b = 1 family") {
        const TransitionMat A = restriction_family(canonical_p_of(make_hat_schwarz(1)));
        TransitionMat want;
        want.e[0][0] = yterm(0);
        want.e[1][0] = yterm(1, RatFunc::x()) + yterm(2);
        want.e[1][1] = yterm(3);
        CHECK(A == want);
    }

    SUBCASE("a degenerate datum restricts with a larger gap and a jump") {
        // rows (1, 0) at (0,1,4): family [[1,0],[x y, y^4]], generic type
        // (3,1); at x = 0 the gap widens to (4,0).
        BiHomogLaurent raw(1);
        raw.set_row(0, LaurentPoly::term(1, Rat(1)));
        const CanonicalP p = normalize(0, 1, 4, raw);
        const JumpReport rep = detect_jumps(restriction_family(p));
        CHECK(rep.m == 3);
        CHECK(rep.n == 1);
        REQUIRE(rep.jumps.size() == 1);
        CHECK(rep.jumps[0].first == Rat(0));
        CHECK(rep.jumps[0].second == 1);
    }

    SUBCASE("a general datum may also jump") {
        // rows (1, z^2) at (0,1,4) degenerates over the origin.
        BiHomogLaurent raw(1);
        raw.set_row(0, LaurentPoly::term(1, Rat(1)));
        raw.set_row(1, LaurentPoly::term(3, Rat(1)));
        const CanonicalP p = normalize(0, 1, 4, raw);
        const JumpReport rep = detect_jumps(restriction_family(p));
        REQUIRE_FALSE(rep.jumps.empty());
        CHECK(rep.jumps[0].first == Rat(0));
    }
}

TEST_CASE("one-variable splitter handles constant matrices") {
    Mat2<Rat> A;
    A.e[0][0] = LPoly<Rat>::term(0, Rat(2));
    A.e[0][1] = LPoly<Rat>::term(0, Rat(1));
    A.e[1][0] = LPoly<Rat>::term(0, Rat(1));
    A.e[1][1] = LPoly<Rat>::term(0, Rat(1));
    const SplitResult<Rat> s = birkhoff_split_q(A);
    CHECK(s.m == 0);
    CHECK(s.n == 0);
    CHECK(oracle::splitting_type(A) == std::pair<long, long>(0, 0));
}
