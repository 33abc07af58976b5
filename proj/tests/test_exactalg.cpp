#include "doctest.h"

#include "p1b/laurent.hpp"
#include "p1b/rational.hpp"
#include "p1b/trunc.hpp"
#include "p1b/xpoly.hpp"

using namespace p1b;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-2") == Rat(-2));
    CHECK(parse_rat(" 5 / 10 ") == Rat(1, 2));
    CHECK(rat_str(Rat(-7, 3)) == "-7/3");
    CHECK(rat_str(Rat(4)) == "4");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rat_pow handles negative exponents") {
    CHECK(rat_pow(Rat(2), 10) == Rat(1024));
    CHECK(rat_pow(Rat(2), -2) == Rat(1, 4));
    CHECK(rat_pow(Rat(-3, 2), 3) == Rat(-27, 8));
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), Error);
}

TEST_CASE("Laurent polynomial arithmetic") {
    const LaurentPoly f = LaurentPoly::term(-2, Rat(3)) + LaurentPoly::term(1, Rat(1, 2));
    const LaurentPoly g = LaurentPoly::term(2, Rat(1));
    CHECK((f * g).min_exp() == 0);
    CHECK((f * g).max_exp() == 3);
    CHECK(f.shifted(2) == f * g);
    CHECK((f - f).is_zero());
    CHECK(f.eval(Rat(2)) == Rat(3, 4) + Rat(1));

    // Substituting z -> 1/z negates every exponent.
    const LaurentPoly h = laurent_subst_inv(f);
    CHECK(h.min_exp() == -1);
    CHECK(h.max_exp() == 2);
    CHECK(h.coeff(2) == Rat(3));
    CHECK(h.coeff(-1) == Rat(1, 2));
    CHECK(laurent_subst_inv(h) == f);
}

TEST_CASE("truncated polynomial ring") {
    TruncPoly p(3);
    p.set_coeff(0, 1);
    p.set_coeff(1, 2);
    const TruncPoly q = p * p;
    CHECK(q.coeff(0) == Rat(1));
    CHECK(q.coeff(1) == Rat(4));
    CHECK(q.coeff(2) == Rat(4));
    CHECK(q.coeff(3) == Rat(0));

    SUBCASE("multiplication truncates at the bound") {
        TruncPoly z(1);
        z.set_coeff(1, 1);
        CHECK((z * z).is_zero());
    }

    SUBCASE("bound -1 is the zero ring") {
        const TruncPoly zero(-1);
        CHECK(zero.is_zero());
        CHECK((zero * zero).is_zero());
    }

    SUBCASE("reversal swaps ends") {
        TruncPoly r(2);
        r.set_coeff(0, 5);
        r.set_coeff(2, 7);
        const TruncPoly rev = r.reversed();
        CHECK(rev.coeff(0) == Rat(7));
        CHECK(rev.coeff(2) == Rat(5));
        CHECK(rev.reversed() == r);
    }
}

TEST_CASE("truncated inverse and composition") {
    TruncPoly lin(4);
    lin.set_coeff(0, 2);
    lin.set_coeff(1, -1);
    const TruncPoly inv = trunc_inverse(lin);
    TruncPoly one(4);
    one.set_coeff(0, 1);
    CHECK(lin * inv == one);

    TruncPoly zero_const(2);
    zero_const.set_coeff(1, 1);
    CHECK_THROWS_AS(trunc_inverse(zero_const), ZeroConstantTerm);

    // compose requires a substituted series without constant term
    TruncPoly w(4);
    w.set_coeff(1, 1);
    w.set_coeff(2, 1);
    TruncPoly f(4);
    f.set_coeff(0, 1);
    f.set_coeff(2, 3);
    const TruncPoly fw = f.compose(w);
    // f(w) = 1 + 3 (z + z^2)^2 = 1 + 3 z^2 + 6 z^3 + ... (truncated)
    CHECK(fw.coeff(0) == Rat(1));
    CHECK(fw.coeff(1) == Rat(0));
    CHECK(fw.coeff(2) == Rat(3));
    CHECK(fw.coeff(3) == Rat(6));
    CHECK(fw.coeff(4) == Rat(3));

    TruncPoly bad(4);
    bad.set_coeff(0, 1);
    CHECK_THROWS_AS(f.compose(bad), DegreeMismatch);
    TruncPoly other_bound(2);
    CHECK_THROWS_AS(f.compose(other_bound), DegreeMismatch);
}

TEST_CASE("trunc/laurent round trip") {
    const LaurentPoly f = LaurentPoly::term(0, Rat(1, 3)) + LaurentPoly::term(2, Rat(5));
    const TruncPoly p = TruncPoly::from_laurent(4, f);
    CHECK(p.to_laurent() == f);
    CHECK_THROWS_AS(TruncPoly::from_laurent(4, LaurentPoly::term(-1, Rat(1))),
                    DegreeMismatch);
}

TEST_CASE("dense x-polynomials") {
    const XPoly f({Rat(-1), Rat(0), Rat(1)}); // x^2 - 1
    const XPoly g({Rat(-1), Rat(1)});         // x - 1
    const auto [q, r] = f.divmod(g);
    CHECK(r.is_zero());
    CHECK(q == XPoly({Rat(1), Rat(1)}));
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK(f.derivative() == XPoly({Rat(0), Rat(2)}));
    CHECK_THROWS_AS(f.divmod(XPoly()), Error);

    SUBCASE("gcd is monic") {
        const XPoly h = f * g;
        const XPoly d = xpoly_gcd(h, f);
        CHECK(d == f * Rat(1));
        CHECK(d.lead() == Rat(1));
    }
}

TEST_CASE("rational roots with multiplicity") {
    // (x - 2)^2 (2x + 1) (x^2 + 1)
    const XPoly f = XPoly::linear_root(Rat(2)) * XPoly::linear_root(Rat(2)) *
                    XPoly({Rat(1), Rat(2)}) * XPoly({Rat(1), Rat(0), Rat(1)});
    const RationalRoots rr = rational_roots(f);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == std::pair<Rat, long>(Rat(-1, 2), 1));
    CHECK(rr.roots[1] == std::pair<Rat, long>(Rat(2), 2));
    CHECK(rr.cofactor.degree() == 2);
    CHECK(rational_roots(rr.cofactor).roots.empty());
}

TEST_CASE("squarefree factorization") {
    const XPoly f = XPoly::linear_root(Rat(1)) * XPoly::linear_root(Rat(1)) *
                    XPoly::linear_root(Rat(-3));
    const auto factors = squarefree_factors(f);
    REQUIRE(factors.size() == 2);
    XPoly rebuilt = XPoly::constant(Rat(1));
    for (const auto& [p, mult] : factors)
        for (long k = 0; k < mult; ++k) rebuilt = rebuilt * p;
    CHECK(rebuilt == f * (Rat(1) / f.lead()));
}

TEST_CASE("rational functions stay reduced") {
    const RatFunc r(XPoly({Rat(-1), Rat(0), Rat(1)}), XPoly({Rat(-1), Rat(1)}));
    CHECK(r.is_polynomial());
    CHECK(r.num() == XPoly({Rat(1), Rat(1)}));
    CHECK(r.eval(Rat(4)) == Rat(5));

    const RatFunc s = RatFunc(Rat(1)) / RatFunc::x();
    CHECK_THROWS_AS(s.eval(Rat(0)), Error);
    CHECK((s * RatFunc::x()) == RatFunc(Rat(1)));
    CHECK_THROWS_AS(RatFunc(Rat(1)) / RatFunc(Rat(0)), Error);

    // denominator is kept monic
    const RatFunc t(XPoly::constant(Rat(1)), XPoly({Rat(0), Rat(2)}));
    CHECK(t.den() == XPoly({Rat(0), Rat(1)}));
    CHECK(t.num() == XPoly::constant(Rat(1, 2)));
}
