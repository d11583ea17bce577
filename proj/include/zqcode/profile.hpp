#pragma once

#include <cstdint>
#include <vector>

#include "zqcode/matrix.hpp"
#include "zqcode/snf.hpp"

namespace zqcode {

struct ProfileOptions {
    /// 2^cols Smith forms are computed; the guard refuses larger ground sets.
    int max_columns = 22;
    int jobs = 1;
    /// The divisor list of rho0 is materialized only up to this many entries;
    /// generic matrices can have astronomically many divisor classes, which
    /// are then served one class at a time (see weight_class).
    std::uint64_t max_period_divisors = 65536;
};

/// Per-subset elementary divisor table for a generator matrix: for every
/// column subset J (bitmask), the rank and divisor chain of G_J, plus the lcm
/// period rho0 of the last divisors. Immutable once built.
class DivisorProfile {
  public:
    const IntMatrix& matrix() const { return g_; }
    int ground_size() const { return g_.cols; }
    int row_count() const { return g_.rows; }
    std::uint32_t full_mask() const { return (ground_size() == 32) ? ~0u : (1u << ground_size()) - 1u; }

    int rank(std::uint32_t mask) const { return ranks_[mask]; }
    int full_rank() const { return ranks_[full_mask()]; }

    /// Divisors > 1 of G_J, ascending (the tail of the chain); the chain is
    /// this list left-padded with 1s up to rank(J).
    const std::vector<BigInt>& torsion(std::uint32_t mask) const { return pool_[chain_id_[mask]]; }
    DivisorChain chain(std::uint32_t mask) const;
    const DivisorChain& full_chain() const { return full_chain_; }

    const BigInt& lcm_period() const { return rho0_; }
    /// Divisors of rho0, ascending: the constituent classes. Throws
    /// budget_error when there are more than max_period_divisors of them.
    const std::vector<BigInt>& period_divisors() const;
    const BigInt& period_divisor_count() const { return rho0_divisor_count_; }
    const std::vector<std::pair<BigInt, unsigned>>& period_factorization() const {
        return rho0_factors_;
    }

    /// prod_{l <= rank(J)} gcd(m, e_{l,J}).
    BigInt gcd_product(std::uint32_t mask, const BigInt& m) const;

    /// |{u in Z_q^k : u G_J = 0}| = gcd_product(J, q) * q^(k - rank(J)).
    BigInt h_subgroup_size(std::uint32_t mask, const BigInt& q) const;

    /// Distinct divisor chains appearing in the table, and a dense id per mask.
    const std::vector<std::vector<BigInt>>& torsion_pool() const { return pool_; }
    std::uint32_t torsion_id(std::uint32_t mask) const { return chain_id_[mask]; }

    friend DivisorProfile build_profile(const IntMatrix&, const ProfileOptions&);

  private:
    IntMatrix g_;
    std::vector<std::uint8_t> ranks_;       // per mask
    std::vector<std::uint32_t> chain_id_;   // per mask, into pool_
    std::vector<std::vector<BigInt>> pool_;  // unique torsion lists
    DivisorChain full_chain_;
    BigInt rho0_ = 1;
    BigInt rho0_divisor_count_ = 1;
    std::vector<std::pair<BigInt, unsigned>> rho0_factors_;
    std::vector<BigInt> rho0_divisors_;  // materialized only when small enough
};

DivisorProfile build_profile(const IntMatrix& g, const ProfileOptions& options = {});

}  // namespace zqcode
