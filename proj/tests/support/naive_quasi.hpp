#pragma once

#include <bit>

#include "zqcode/profile.hpp"
#include "zqcode/quasi.hpp"

namespace zqcode::testing {

/// Reference constituents by the literal double sum over pairs J subset of K:
/// 3^n subset pairs, no transform. Oracle for the production path, n <= ~12.
inline std::vector<UniPoly> naive_class_constituents(const DivisorProfile& p, const BigInt& m) {
    const int n = p.ground_size();
    const int r = p.full_rank();
    const BigInt denom = p.gcd_product(p.full_mask(), m);
    std::vector<UniPoly> f(static_cast<std::size_t>(n) + 1);
    const std::uint32_t full = p.full_mask();
    for (std::uint32_t j = 0;; ++j) {
        const int i = n - std::popcount(j);
        UniPoly& fi = f[static_cast<std::size_t>(i)];
        // K runs over supersets of J: K = J | s with s a submask of ~J.
        const std::uint32_t complement = full & ~j;
        std::uint32_t s = complement;
        while (true) {
            const std::uint32_t k = j | s;
            const int sign_bits = std::popcount(k) - std::popcount(j);
            const Rational coeff =
                make_rational((sign_bits % 2 ? -1 : 1) * p.gcd_product(k, m), denom);
            fi = fi + UniPoly::monomial(coeff, r - p.rank(k));
            if (s == 0) break;
            s = (s - 1) & complement;
        }
        if (j == full) break;
    }
    return f;
}

inline WeightQuasi naive_weight_quasi(const DivisorProfile& p) {
    WeightQuasi wq;
    wq.n = p.ground_size();
    wq.rank = p.full_rank();
    wq.rho0 = p.lcm_period();
    for (const BigInt& m : p.period_divisors())
        wq.constituents.emplace(m, naive_class_constituents(p, m));
    return wq;
}

}  // namespace zqcode::testing
