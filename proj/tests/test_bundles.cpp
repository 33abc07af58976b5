#include "doctest.h"

#include <random>

#include "p1b/bihomog.hpp"
#include "p1b/bundles.hpp"

using namespace p1b;

namespace {

TruncPoly window(long bound, std::vector<Rat> coeffs) {
    return TruncPoly(bound, std::move(coeffs));
}

} // namespace

TEST_CASE("invariant conventions") {
    CHECK(xswap({2, 1, 3}) == NumericalInvariants{2, -1, -3});
    CHECK(normalized_invariants({0, 0, 2}) == NumericalInvariants{0, 0, -2});
    CHECK(normalized_invariants({1, -2, 3}) == NumericalInvariants{1, 2, -3});
    CHECK(normalized_invariants({1, 2, -3}) == NumericalInvariants{1, 2, -3});

    CHECK(canonical_row_bound({1, 2, 4}, 0) == 2);
    CHECK(canonical_row_bound({1, 2, 4}, 2) == 0);
    CHECK(canonical_row_bound({2, 1, 2}, 1) == -1); // empty window clamps
}

TEST_CASE("normalization worked examples") {
    SUBCASE("a monomial inside the window survives") {
        BiHomogLaurent raw(1);
        raw.set_row(0, LaurentPoly::term(1, Rat(1)));
        const CanonicalP p = normalize(1, 1, 3, raw);
        CHECK(p.rows[0] == window(1, {Rat(1)}));
        CHECK(p.rows[1] == window(0, {}));
        CHECK_FALSE(is_decomposable(p));
    }

    SUBCASE("terms outside both window ends are killed") {
        BiHomogLaurent raw(1);
        raw.set_row(0, LaurentPoly::term(5, Rat(1)) + LaurentPoly::term(-3, Rat(7)));
        raw.set_row(1, LaurentPoly::term(3, Rat(4)));
        const CanonicalP p = normalize(2, 1, 2, raw);
        CHECK(is_decomposable(p));
        CHECK(p.inv == NumericalInvariants{2, 1, 2});
    }

    SUBCASE("leading coefficient is scaled to one") {
        BiHomogLaurent raw(1);
        raw.set_row(0, LaurentPoly::term(1, Rat(2)) + LaurentPoly::term(2, Rat(2)));
        const CanonicalP p = normalize(0, 1, 3, raw);
        CHECK(p.rows[0] == window(1, {Rat(1), Rat(1)}));
        CHECK(p.rows[1] == window(1, {}));
    }

    SUBCASE("b = 0 is always decomposable and stores c <= 0") {
        BiHomogLaurent raw(0);
        raw.set_row(0, LaurentPoly::term(1, Rat(1)));
        const CanonicalP p = normalize(2, 0, 3, raw);
        CHECK(is_decomposable(p));
        CHECK(p.inv == NumericalInvariants{2, 0, -3});
    }

    SUBCASE("row count must match b") {
        CHECK_THROWS_AS(normalize(1, 2, 4, BiHomogLaurent(1)), DegreeMismatch);
    }
}

TEST_CASE("normalization is invariant under the equivalence moves") {
    // P and lambda P + z^c Q1(y0, y1, z) + Q2(y0 z^a, y1, 1/z) normalize
    // identically; Q2's row i only carries exponents <= a*i.
    std::mt19937_64 rng(0x00c0ffeeULL);
    std::uniform_int_distribution<long> small(-5, 5);
    const long boxes[3][3] = {{1, 2, 4}, {2, 3, 5}, {0, 2, 4}};
    for (const auto& abc : boxes) {
        const long a = abc[0], b = abc[1], c = abc[2];
        BiHomogLaurent raw(b);
        for (long i = 0; i <= b; ++i) {
            LaurentPoly f;
            for (long e = a * i + 1; e <= c - 1; ++e)
                f = f + LaurentPoly::term(e, Rat(small(rng)));
            raw.set_row(i, f);
        }
        const CanonicalP base = normalize(a, b, c, raw);
        for (int trial = 0; trial < 25; ++trial) {
            Rat lambda(0);
            while (lambda == 0) lambda = Rat(small(rng), 1 + (trial % 3));
            BiHomogLaurent pert = expand(base) * lambda;
            for (long i = 0; i <= b; ++i) {
                LaurentPoly junk;
                for (long d = 0; d <= 3; ++d) {
                    junk = junk + LaurentPoly::term(c + d, Rat(small(rng)));
                    junk = junk + LaurentPoly::term(a * i - d, Rat(small(rng)));
                }
                pert.set_row(i, pert.row(i) + junk);
            }
            CHECK(normalize(a, b, c, pert) == base);
        }
    }
}

TEST_CASE("expand followed by normalize is the identity on canonical data") {
    BiHomogLaurent raw(2);
    raw.set_row(0, LaurentPoly::term(1, Rat(3)) + LaurentPoly::term(3, Rat(1)));
    raw.set_row(1, LaurentPoly::term(2, Rat(1, 2)));
    raw.set_row(2, LaurentPoly::term(3, Rat(-2)));
    const CanonicalP p = normalize(1, 2, 5, raw);
    CHECK(normalize(1, 2, 5, expand(p)) == p);
}

TEST_CASE("descriptor factories enforce each family's range") {
    CHECK(make_dec_fa(2, 1, 1).str() == "DecFa(2,1,1)");
    // b = 0 classes are stored with c <= 0; the other representative is
    // rejected rather than silently swapped
    CHECK_THROWS_AS(make_dec_fa(2, 0, 3), RangeViolation);
    CHECK(make_dec_fa_unchecked(2, 0, 3).c == 3);
    CHECK_THROWS_AS(make_dec_fa(-1, 0, 0), RangeViolation);
    CHECK_THROWS_AS(make_dec_fa(2, -1, 0), RangeViolation);

    CHECK(make_dec_p2(0).b == 0);
    CHECK_THROWS_AS(make_dec_p2(-1), RangeViolation);

    CHECK(umemura_k(make_umemura(2, 3, 4)) == 1);
    CHECK_THROWS_AS(make_umemura(0, 1, 2), InvalidUmemura);  // a >= 1
    CHECK_THROWS_AS(make_umemura(2, 1, 3), InvalidUmemura);  // c - 2 not a multiple of a
    CHECK_THROWS_AS(make_umemura(2, 1, 6), InvalidUmemura);  // k = 2 > b
    CHECK_THROWS_AS(make_umemura(2, 1, 0), InvalidUmemura);  // c >= 2

    CHECK_THROWS_AS(make_schwarz(0), RangeViolation);
    CHECK_THROWS_AS(make_hat_schwarz(0), RangeViolation);
    CHECK_THROWS_AS(make_v1(1), RangeViolation);
    CHECK(make_v1(2).str() == "V1(2)");
}

TEST_CASE("descriptor ordering is total and stable") {
    const BundleDesc d1 = make_dec_fa(0, 1, 0);
    const BundleDesc d2 = make_dec_fa(0, 1, 1);
    const BundleDesc d3 = make_umemura(1, 1, 3);
    CHECK(d1 < d2);
    CHECK(d2 < d3); // family order before invariants
    CHECK_FALSE(d3 < d2);
    CHECK(d1 == make_dec_fa(0, 1, 0));
}

TEST_CASE("numerical invariants of descriptors") {
    CHECK(invariants_of(make_dec_fa(2, 1, 1)) == NumericalInvariants{2, 1, 1});
    CHECK(invariants_of(make_hat_schwarz(3)) == NumericalInvariants{0, 3, 5});
    CHECK(invariants_of(make_umemura(2, 3, 4)) == NumericalInvariants{2, 3, 4});
    CHECK_THROWS_AS(invariants_of(make_dec_p2(1)), NotOverHirzebruch);
    CHECK_THROWS_AS(invariants_of(make_schwarz(1)), NotOverHirzebruch);
    CHECK_THROWS_AS(invariants_of(make_v1(2)), NotOverHirzebruch);
}

TEST_CASE("canonical data of the named families") {
    SUBCASE("decomposable bundles have zero rows") {
        const CanonicalP p = canonical_p_of(make_dec_fa(3, 2, 5));
        CHECK(is_decomposable(p));
        CHECK(p.rows.size() == 3);
    }

    SUBCASE("Umemura data have a single constant row") {
        const CanonicalP p = canonical_p_of(make_umemura(2, 2, 4));
        CHECK(p.rows[0].is_zero());
        CHECK(p.rows[1] == window(0, {Rat(1)}));
        CHECK(p.rows[2].is_zero());
    }

    SUBCASE("pulled-back Schwarzenberger rows are powers of z") {
        const CanonicalP p = canonical_p_of(make_hat_schwarz(2));
        CHECK(p.inv == NumericalInvariants{0, 2, 4});
        CHECK(p.rows[0] == window(2, {Rat(1)}));
        CHECK(p.rows[1] == window(2, {Rat(0), Rat(1)}));
        CHECK(p.rows[2] == window(2, {Rat(0), Rat(0), Rat(1)}));
    }

    SUBCASE("families over the plane have no such datum") {
        CHECK_THROWS_AS(canonical_p_of(make_schwarz(2)), UnsupportedFamily);
        CHECK_THROWS_AS(canonical_p_of(make_dec_p2(1)), UnsupportedFamily);
        CHECK_THROWS_AS(canonical_p_of(make_v1(2)), UnsupportedFamily);
    }
}

TEST_CASE("pascal-column identity") {
    CHECK(binomial_identity(0, 0, 0) == std::pair<Int, Int>(1, 1));
    CHECK(binomial_identity(2, 1, 0) == std::pair<Int, Int>(3, 3));
    CHECK(binomial_identity(5, 4, 2) == std::pair<Int, Int>(15, 15));
    CHECK_THROWS_AS(binomial_identity(2, 3, 0), RangeViolation);
    CHECK_THROWS_AS(binomial_identity(2, 1, 2), RangeViolation);

    for (long r = 0; r <= 12; ++r)
        for (long p = 0; p <= r; ++p)
            for (long k = 0; k <= p; ++k) {
                const auto [lhs, rhs] = binomial_identity(r, p, k);
                CHECK(lhs == rhs);
            }
}
