#pragma once

#include <cstdint>

#include "zqcode/matrix.hpp"
#include "zqcode/weights.hpp"

namespace zqcode {

/// Ground truth by exhaustive enumeration of Z_q^k. Deliberately formula-free:
/// its only inputs are the generator matrix and q.
struct OracleResult {
    BigInt q;
    WeightDistribution distribution;
    BigInt kernel_size;
    MinWeight min_weight = MinWeight::infinite();
};

struct OracleOptions {
    std::uint64_t budget = 100'000'000;  // maximum number of u-vectors
    int jobs = 1;
};

/// Walks all u in Z_q^k with an incremental odometer, tallies wt(uG mod q) in
/// u-space, and divides by the independently counted kernel size (the division
/// must be exact; anything else is a consistency_error).
OracleResult oracle_enumerate(const IntMatrix& g, const BigInt& q, const OracleOptions& options = {});

}  // namespace zqcode
