#include <doctest.h>

#include "zqcode/errors.hpp"
#include "zqcode/families.hpp"
#include "zqcode/minweight.hpp"
#include "zqcode/oracle.hpp"

using namespace zqcode;

TEST_CASE("family generators") {
    const FamilySpec n4 = make_family(FamilyTag::N, 4);
    CHECK(n4.generator == make_matrix({{1, 0, 0, 0, 0, 1, 1, 1},
                                       {0, 1, 0, 0, 1, 0, 1, 1},
                                       {0, 0, 1, 0, 1, 1, 0, 1},
                                       {0, 0, 0, 1, 1, 1, 1, 0}}));

    const FamilySpec z3 = make_family(FamilyTag::Z, 3);
    CHECK(z3.generator == make_matrix({{1, 0, 0, 0, 1, 1, 1},
                                       {0, 1, 0, 1, 0, 1, 1},
                                       {0, 0, 1, 1, 1, 0, 1}}));

    const FamilySpec n2 = make_family(FamilyTag::N, 2);
    CHECK(n2.generator == make_matrix({{1, 0, 0, 1}, {0, 1, 1, 0}}));
    CHECK(n2.transformed == make_matrix({{1, 1, 1, 1}, {0, 0, 1, 1}}));

    CHECK_THROWS_AS(make_family(FamilyTag::Z, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_tag("x"), std::invalid_argument);
}

TEST_CASE("both generator forms share the weight enumerator") {
    for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z})
        for (int k = 2; k <= 4; ++k) {
            const FamilySpec spec = make_family(tag, k);
            for (long q = 2; q <= 5; ++q)
                CHECK(oracle_enumerate(spec.generator, q).distribution.counts ==
                      oracle_enumerate(spec.transformed, q).distribution.counts);
        }
}

TEST_CASE("closed formula values") {
    CHECK(char_quasi_closed(FamilyTag::Z, 3, 3) == 0);
    for (int k = 2; k <= 5; ++k) CHECK(char_quasi_closed(FamilyTag::N, k, 1) == 0);

    // Coprime class of the k=5 spike: q^5 - 11q^4 + 50q^3 - 120q^2 + 155q - 75.
    const UniPoly expected{-75, 155, -120, 50, -11, 1};
    const QuasiPolynomial closed = closed_char_quasi(FamilyTag::Z, 5);
    CHECK(closed.constituents.at(1) == expected);
    for (long q : {7, 11, 13, 25}) {
        CHECK(gcd_int(q, closed.period) == 1);
        CHECK(char_quasi_closed(FamilyTag::Z, 5, q) == expected.eval(BigInt(q)).get_num());
    }
}

TEST_CASE("closed formula equals the subset-table pipeline") {
    for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z})
        for (int k = 2; k <= 4; ++k) {
            const FamilySpec spec = make_family(tag, k);
            const DivisorProfile profile = build_profile(spec.generator);
            const WeightQuasi wq = weight_quasi(profile);
            const QuasiPolynomial chi = characteristic_quasi(profile, wq);
            for (long q = 1; q <= 20; ++q)
                CHECK(Rational(char_quasi_closed(tag, k, q)) == chi.eval(q));
        }
}

TEST_CASE("closed quasi-polynomial has the expected minimum period") {
    for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z}) {
        CHECK(minimum_period(closed_char_quasi(tag, 2)) == 1);
        CHECK(minimum_period(closed_char_quasi(tag, 4)) == 6);
        CHECK(minimum_period(closed_char_quasi(tag, 6)) == 60);
    }
}

TEST_CASE("parity obstructions") {
    const FamilySpec n4 = make_family(FamilyTag::N, 4);
    for (long q = 2; q <= 6; ++q) {
        const auto dist = oracle_enumerate(n4.generator, q).distribution;
        CHECK(parity_obstruction(FamilyTag::N, 4, dist));
        CHECK(dist.counts[1] == 0);
        CHECK(dist.counts[2] == 0);
        CHECK(dist.counts[3] == 0);
    }
    const FamilySpec z3 = make_family(FamilyTag::Z, 3);
    for (long q = 2; q <= 6; ++q) {
        const auto dist = oracle_enumerate(z3.generator, q).distribution;
        CHECK(parity_obstruction(FamilyTag::Z, 3, dist));
    }
    // k = 2 exemption: weight 2 occurs.
    const auto n2 = oracle_enumerate(make_family(FamilyTag::N, 2).generator, 2).distribution;
    CHECK(parity_obstruction(FamilyTag::N, 2, n2));
    CHECK(n2.counts[2] != 0);

    // A distribution with a forbidden weight is rejected.
    WeightDistribution bad = n2;
    bad.counts[1] = 1;
    CHECK_FALSE(parity_obstruction(FamilyTag::N, 2, bad));
}

TEST_CASE("family minimum weights") {
    CHECK(family_min_weight(FamilyTag::N, 3) == 3);
    CHECK(family_min_weight(FamilyTag::Z, 3) == 4);
    CHECK(family_min_weight(FamilyTag::N, 5) == 4);
    CHECK(family_min_weight(FamilyTag::Z, 5) == 4);
    CHECK(family_min_weight(FamilyTag::Z, 2) == 3);

    for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z})
        for (int k = 2; k <= 5; ++k) {
            const FamilySpec spec = make_family(tag, k);
            for (long q = 2; q <= 6; ++q)
                CHECK(oracle_enumerate(spec.generator, q).min_weight ==
                      MinWeight::finite(family_min_weight(tag, k)));
        }

    // The weight-4 witness row vector for k >= 4.
    for (const FamilyTag tag : {FamilyTag::N, FamilyTag::Z}) {
        const FamilySpec spec = make_family(tag, 5);
        BigInt nonzero = 0;
        for (int j = 0; j < spec.generator.cols; ++j) {
            const BigInt entry = spec.generator.at(0, j) - spec.generator.at(1, j);
            nonzero += entry != 0;
        }
        CHECK(nonzero == 4);
    }
}
