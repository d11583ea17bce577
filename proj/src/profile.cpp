#include "zqcode/profile.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "zqcode/errors.hpp"
#include "zqcode/parallel.hpp"

namespace zqcode {

DivisorChain DivisorProfile::chain(std::uint32_t mask) const {
    DivisorChain c;
    c.rank = ranks_[mask];
    const auto& tail = pool_[chain_id_[mask]];
    c.divisors.assign(static_cast<std::size_t>(c.rank) - tail.size(), BigInt(1));
    c.divisors.insert(c.divisors.end(), tail.begin(), tail.end());
    return c;
}

BigInt DivisorProfile::gcd_product(std::uint32_t mask, const BigInt& m) const {
    BigInt p = 1;
    for (const BigInt& e : pool_[chain_id_[mask]]) p *= gcd_int(m, e);
    return p;
}

BigInt DivisorProfile::h_subgroup_size(std::uint32_t mask, const BigInt& q) const {
    return gcd_product(mask, q) * pow_int(q, static_cast<unsigned long>(g_.rows - ranks_[mask]));
}

DivisorProfile build_profile(const IntMatrix& g, const ProfileOptions& options) {
    require_no_zero_columns(g);
    if (g.cols > 26) throw budget_error("ground sets beyond 26 columns are not supported");
    if (g.cols > options.max_columns)
        throw budget_error("ground set of " + std::to_string(g.cols) +
                           " columns exceeds the subset-table cap of " +
                           std::to_string(options.max_columns) + " (raise max_columns to override)");

    DivisorProfile p;
    p.g_ = g;
    const std::size_t table = std::size_t(1) << g.cols;
    p.ranks_.assign(table, 0);
    p.chain_id_.assign(table, 0);

    std::vector<std::vector<BigInt>> tails(table);
    parallel_chunks(options.jobs, table, [&](std::size_t first, std::size_t last) {
        for (std::size_t mask = std::max<std::size_t>(first, 1); mask < last; ++mask) {
            DivisorChain c = smith_divisors(g.columns(static_cast<std::uint32_t>(mask)));
            p.ranks_[mask] = static_cast<std::uint8_t>(c.rank);
            std::size_t skip = 0;
            while (skip < c.divisors.size() && c.divisors[skip] == 1) ++skip;
            tails[mask].assign(c.divisors.begin() + skip, c.divisors.end());
        }
    });

    std::map<std::vector<BigInt>, std::uint32_t> seen;
    for (std::size_t mask = 0; mask < table; ++mask) {
        auto [it, fresh] = seen.emplace(std::move(tails[mask]), static_cast<std::uint32_t>(p.pool_.size()));
        if (fresh) p.pool_.push_back(it->first);
        p.chain_id_[mask] = it->second;
    }

    // rho0 via merged factorizations of the distinct last divisors; the lcm
    // itself can be hundreds of digits while every factor stays small.
    std::map<BigInt, unsigned> prime_exp;
    BigInt lcm_check = 1;
    for (const auto& tail : p.pool_) {
        if (tail.empty()) continue;
        lcm_check = lcm_int(lcm_check, tail.back());
        for (const auto& [prime, exp] : factorize(tail.back())) {
            auto [it, fresh] = prime_exp.emplace(prime, exp);
            if (!fresh) it->second = std::max(it->second, exp);
        }
    }
    p.rho0_ = 1;
    for (const auto& [prime, exp] : prime_exp) {
        p.rho0_ *= pow_int(prime, exp);
        p.rho0_divisor_count_ *= exp + 1;
        p.rho0_factors_.emplace_back(prime, exp);
    }
    if (p.rho0_ != lcm_check) throw consistency_error("factorized lcm period mismatch");

    p.full_chain_ = p.chain(p.full_mask());
    if (p.rho0_divisor_count_ <= BigInt(static_cast<unsigned long>(options.max_period_divisors))) {
        p.rho0_divisors_ = divisors_of(p.rho0_);
    }
    return p;
}

const std::vector<BigInt>& DivisorProfile::period_divisors() const {
    if (rho0_divisors_.empty() && rho0_ != 1)
        throw budget_error("rho0 = " + rho0_.get_str() + " has " + rho0_divisor_count_.get_str() +
                           " divisors; the full class list is not materialized (use the "
                           "per-class interface instead)");
    return rho0_divisors_;
}

}  // namespace zqcode
