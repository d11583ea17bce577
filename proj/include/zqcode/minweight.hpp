#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zqcode/quasi.hpp"
#include "zqcode/weights.hpp"

namespace zqcode {

/// Minimum weight of the code at a concrete q (infinite when the code is {0}).
MinWeight min_weight_at(const DivisorProfile& profile, const WeightQuasi& wq, const BigInt& q);

/// d'_m: smallest i > 0 whose class-m constituent is a nonzero polynomial,
/// recomputed through the closed one-subset-size formula as a cross-check.
struct GenericMinWeight {
    MinWeight d_prime = MinWeight::infinite();
    UniPoly leading_constituent;  // the constituent at weight d'_m (zero when degenerate)
};
GenericMinWeight generic_min_weight(const DivisorProfile& profile, const WeightQuasi& wq,
                                    const BigInt& m);

/// Whether d_m = d'_m, decided by the witness-subset criterion and
/// cross-checked against the sign of f^m_{d'_m}(m).
struct StabilityVerdict {
    bool stable = false;
    std::string condition;  // "i", "ii", or "" when no witness exists
    std::optional<std::uint32_t> witness_mask;
    MinWeight d_prime = MinWeight::infinite();
};
StabilityVerdict stability_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const BigInt& m);

struct ClassReport {
    BigInt m;
    MinWeight d_prime = MinWeight::infinite();
    bool stable_at_m = false;
    std::string condition;             // "i", "ii", or ""
    std::vector<int> witness_columns;  // 1-based
    MinWeight d_at_m = MinWeight::infinite();
    std::vector<std::pair<BigInt, MinWeight>> samples;  // q > m in the class
    bool coprime_to_last_divisor = false;     // sufficiency hypothesis, m >= 2
    bool divides_first_divisor = false;       // failure of the necessary condition
    bool sufficiency_converse_fails = false;  // stable although gcd(m, e_r) != 1
    bool necessity_converse_fails = false;    // m does not divide e_1, yet unstable
};

struct MinWeightReport {
    BigInt rho0;
    BigInt m0;  // smallest q > 1 coprime to rho0
    MinWeight d_m0 = MinWeight::infinite();
    std::vector<ClassReport> classes;
};

/// Per-divisor-class report: d'_m, boundary stability with witnesses, the
/// coprimality sufficiency and divisibility necessity checks, and sampled
/// minimum weights over each class.
MinWeightReport min_weight_report(const DivisorProfile& profile, const WeightQuasi& wq);

}  // namespace zqcode
