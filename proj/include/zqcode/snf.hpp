#pragma once

#include <vector>

#include "zqcode/matrix.hpp"
#include "zqcode/rational.hpp"

namespace zqcode {

/// Rank and elementary divisor chain e_1 | e_2 | ... | e_rank of an integer
/// matrix, all divisors positive.
struct DivisorChain {
    int rank = 0;
    std::vector<BigInt> divisors;

    bool operator==(const DivisorChain& other) const = default;
};

/// Smith normal form invariants via elimination with min-absolute-value
/// pivoting and a divisibility fix-up pass. The transform pair is not kept.
DivisorChain smith_divisors(const IntMatrix& m);

/// gcd of the absolute values of all j x j minors (0 when they all vanish).
/// Exponential; a test oracle for small matrices, not a production path.
BigInt minor_gcd(const IntMatrix& m, int j);

}  // namespace zqcode
