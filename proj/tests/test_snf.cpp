#include <doctest.h>

#include <random>

#include "support/random_matrices.hpp"
#include "zqcode/snf.hpp"

using namespace zqcode;
using zqcode::testing::random_matrix;

TEST_CASE("divisors of small matrices") {
    const auto diag = smith_divisors(make_matrix({{2, 0}, {0, 4}}));
    CHECK(diag.rank == 2);
    CHECK(diag.divisors == std::vector<BigInt>{2, 4});

    const auto wide = smith_divisors(make_matrix({{1, 0, 0, 0, 0, 1, 1, 1},
                                                  {0, 1, 0, 0, 1, 0, 1, 1},
                                                  {0, 0, 1, 0, 1, 1, 0, 1},
                                                  {0, 0, 0, 1, 1, 1, 1, 0}}));
    CHECK(wide.rank == 4);
    CHECK(wide.divisors == std::vector<BigInt>{1, 1, 1, 1});

    const auto pair = smith_divisors(make_matrix({{1, 1}, {1, -1}}));
    CHECK(pair.rank == 2);
    CHECK(pair.divisors == std::vector<BigInt>{1, 2});

    CHECK(smith_divisors(IntMatrix()).rank == 0);
    CHECK(smith_divisors(make_matrix({{0, 0}, {0, 0}})).rank == 0);
}

TEST_CASE("minor gcd oracle values") {
    const IntMatrix diag = make_matrix({{2, 0}, {0, 4}});
    CHECK(minor_gcd(diag, 1) == 2);
    CHECK(minor_gcd(diag, 2) == 8);
    const IntMatrix b2 = make_matrix({{1, 0, 1, 1}, {0, 1, 1, -1}});
    CHECK(minor_gcd(b2, 2) == 1);
    CHECK_THROWS_AS(minor_gcd(diag, 3), std::out_of_range);
    CHECK_THROWS_AS(minor_gcd(diag, 0), std::out_of_range);
}

TEST_CASE("divisor chain products equal minor gcds") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const IntMatrix m = random_matrix(rng, dim(rng), dim(rng) + 2, -4, 4);
        const DivisorChain chain = smith_divisors(m);
        BigInt product = 1;
        for (int j = 1; j <= chain.rank; ++j) {
            product *= chain.divisors[static_cast<std::size_t>(j - 1)];
            CHECK(product == minor_gcd(m, j));
            if (j > 1)
                CHECK(chain.divisors[static_cast<std::size_t>(j - 1)] %
                          chain.divisors[static_cast<std::size_t>(j - 2)] ==
                      0);
        }
        if (chain.rank < std::min(m.rows, m.cols)) CHECK(minor_gcd(m, chain.rank + 1) == 0);
    }
}

TEST_CASE("invariance under elementary operations") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick(0, 2), mult(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = random_matrix(rng, 3, 4, -3, 3);
        const DivisorChain before = smith_divisors(m);
        switch (pick(rng)) {
            case 0: {  // swap two rows
                for (int j = 0; j < m.cols; ++j) std::swap(m.at(0, j), m.at(2, j));
                break;
            }
            case 1: {  // negate a column
                for (int i = 0; i < m.rows; ++i) m.at(i, 1) = -m.at(i, 1);
                break;
            }
            default: {  // add a multiple of one row to another
                const int c = mult(rng);
                for (int j = 0; j < m.cols; ++j) m.at(1, j) += c * m.at(0, j);
                break;
            }
        }
        CHECK(smith_divisors(m) == before);
    }
}
