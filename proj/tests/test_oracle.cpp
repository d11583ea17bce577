#include <doctest.h>

#include "zqcode/errors.hpp"
#include "zqcode/oracle.hpp"

using namespace zqcode;

TEST_CASE("enumeration examples") {
    const auto twice = oracle_enumerate(make_matrix({{2, 0}, {0, 2}}), 4);
    CHECK(twice.distribution.counts == std::vector<BigInt>{1, 2, 1});
    CHECK(twice.kernel_size == 4);

    const auto diag2 = oracle_enumerate(make_matrix({{2, 0}, {0, 4}}), 2);
    CHECK(diag2.distribution.counts == std::vector<BigInt>{1, 0, 0});
    CHECK(diag2.min_weight.is_infinite());

    const auto trivial = oracle_enumerate(make_matrix({{5, 3}, {7, 2}}), 1);
    CHECK(trivial.distribution.counts == std::vector<BigInt>{1, 0, 0});
}

TEST_CASE("minimum weights from the tally") {
    const IntMatrix n4 = make_matrix({{1, 0, 0, 0, 0, 1, 1, 1},
                                      {0, 1, 0, 0, 1, 0, 1, 1},
                                      {0, 0, 1, 0, 1, 1, 0, 1},
                                      {0, 0, 0, 1, 1, 1, 1, 0}});
    CHECK(oracle_enumerate(n4, 2).min_weight == MinWeight::finite(4));

    const IntMatrix z3 = make_matrix({{1, 0, 0, 0, 1, 1, 1},
                                      {0, 1, 0, 1, 0, 1, 1},
                                      {0, 0, 1, 1, 1, 0, 1}});
    CHECK(oracle_enumerate(z3, 2).min_weight == MinWeight::finite(4));
}

TEST_CASE("budget guard") {
    const IntMatrix wide = make_matrix({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(oracle_enumerate(wide, 100, {.budget = 100}), budget_error);
    CHECK_NOTHROW(oracle_enumerate(wide, 10, {.budget = 100}));
}

TEST_CASE("negative entries and threaded runs agree") {
    const IntMatrix g = make_matrix({{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}});
    for (long q = 1; q <= 9; ++q) {
        const auto serial = oracle_enumerate(g, q);
        const auto threaded = oracle_enumerate(g, q, {.jobs = 3});
        CHECK(serial.distribution.counts == threaded.distribution.counts);
        CHECK(serial.kernel_size == threaded.kernel_size);
    }
}
