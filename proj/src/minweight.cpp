#include "zqcode/minweight.hpp"

#include <bit>

#include "zqcode/errors.hpp"

namespace zqcode {

MinWeight min_weight_at(const DivisorProfile& profile, const WeightQuasi& wq, const BigInt& q) {
    return min_weight_of(weight_distribution(profile, wq, q));
}

GenericMinWeight generic_min_weight(const DivisorProfile& profile, const WeightQuasi& wq,
                                    const BigInt& m) {
    const auto& f = wq.class_exact(m);
    GenericMinWeight out;
    int d = -1;
    for (int i = 1; i <= wq.n && d < 0; ++i)
        if (!f[static_cast<std::size_t>(i)].is_zero()) d = i;
    if (d < 0) return out;  // degenerate class: no nonzero positive-weight constituent
    out.d_prime = MinWeight::finite(d);
    out.leading_constituent = f[static_cast<std::size_t>(d)];

    if (out.leading_constituent.degree() > 1)
        throw consistency_error("leading constituent has degree > 1 in class gcd=" + m.get_str());

    // Closed form: sum over |J| = n - d'_m of (gcd ratio * t^(r(E)-r(J)) - 1).
    const BigInt denom = profile.gcd_product(profile.full_mask(), m);
    UniPoly closed;
    const std::size_t table = std::size_t(1) << wq.n;
    for (std::size_t mask = 0; mask < table; ++mask) {
        if (std::popcount(mask) != wq.n - d) continue;
        const std::uint32_t j = static_cast<std::uint32_t>(mask);
        const int drop = profile.full_rank() - profile.rank(j);
        if (drop < 0 || drop > 1)
            throw consistency_error("corank of a minimal-support subset outside {0,1}");
        const Rational ratio = make_rational(profile.gcd_product(j, m), denom);
        closed = closed + UniPoly::monomial(ratio, drop) - UniPoly::constant(1);
    }
    if (closed != out.leading_constituent)
        throw consistency_error("closed form for f at d'_m disagrees with the pipeline in class gcd=" +
                                m.get_str());
    return out;
}

StabilityVerdict stability_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const BigInt& m) {
    StabilityVerdict v;
    const GenericMinWeight gmw = generic_min_weight(profile, wq, m);
    v.d_prime = gmw.d_prime;
    if (gmw.d_prime.is_infinite()) return v;  // degenerate class, excluded

    const auto& chain_e = profile.full_chain().divisors;
    const int rank_e = profile.full_rank();
    const std::size_t table = std::size_t(1) << wq.n;
    for (std::size_t mask = 0; mask < table && !v.stable; ++mask) {
        if (std::popcount(mask) != wq.n - gmw.d_prime.value()) continue;
        const std::uint32_t j = static_cast<std::uint32_t>(mask);
        const int rank_j = profile.rank(j);

        BigInt head = 1;  // prod over the first rank(J) divisors of E
        for (int l = 0; l < rank_j; ++l) head *= gcd_int(m, chain_e[static_cast<std::size_t>(l)]);
        if (profile.gcd_product(j, m) != head) {
            v.stable = true;
            v.condition = "i";
            v.witness_mask = j;
        } else if (rank_e == rank_j + 1 &&
                   chain_e[static_cast<std::size_t>(rank_j)] % m != 0) {
            v.stable = true;
            v.condition = "ii";
            v.witness_mask = j;
        }
    }

    const bool value_check = gmw.leading_constituent.eval(m) != 0;
    if (value_check != v.stable)
        throw consistency_error("stability witness criterion disagrees with f(m) != 0 in class gcd=" +
                                m.get_str());
    return v;
}

namespace {

std::vector<int> mask_columns(std::uint32_t mask) {
    std::vector<int> cols;
    for (int j = 0; mask; ++j, mask >>= 1)
        if (mask & 1u) cols.push_back(j + 1);
    return cols;
}

}  // namespace

MinWeightReport min_weight_report(const DivisorProfile& profile, const WeightQuasi& wq) {
    MinWeightReport report;
    report.rho0 = profile.lcm_period();

    BigInt m0 = 2;
    while (gcd_int(m0, report.rho0) != 1) ++m0;
    report.m0 = m0;
    report.d_m0 = min_weight_at(profile, wq, m0);

    const auto& chain_e = profile.full_chain().divisors;
    const BigInt first_divisor = chain_e.empty() ? BigInt(1) : chain_e.front();
    const BigInt last_divisor = chain_e.empty() ? BigInt(1) : chain_e.back();

    for (const BigInt& m : profile.period_divisors()) {
        ClassReport cr;
        cr.m = m;
        const StabilityVerdict v = stability_check(profile, wq, m);
        cr.d_prime = v.d_prime;
        cr.stable_at_m = v.stable;
        cr.condition = v.condition;
        if (v.witness_mask) cr.witness_columns = mask_columns(*v.witness_mask);
        if (m > 1) cr.d_at_m = min_weight_at(profile, wq, m);

        // d_q is constant over q > m in the class; sample up to 4*rho0 + m.
        const BigInt limit = 4 * report.rho0 + m;
        for (BigInt q = m + 1; q <= limit; ++q) {
            if (gcd_int(q, report.rho0) != m) continue;
            const MinWeight dq = min_weight_at(profile, wq, q);
            cr.samples.emplace_back(q, dq);
            if (!cr.d_prime.is_infinite() && dq != cr.d_prime)
                throw consistency_error("minimum weight not constant on class gcd=" + m.get_str() +
                                        " at q=" + q.get_str());
        }
        if (m > 1 && !cr.d_prime.is_infinite() && v.stable != (cr.d_at_m == cr.d_prime))
            throw consistency_error("stability verdict contradicts d at q=m for class gcd=" +
                                    m.get_str());
        if (m == 1 && !cr.d_prime.is_infinite() && report.d_m0 != cr.d_prime)
            throw consistency_error("coprime minimum weight differs from the generic value");

        if (m >= 2) {
            cr.coprime_to_last_divisor = gcd_int(m, last_divisor) == 1;
            cr.divides_first_divisor = first_divisor % m == 0;
            if (cr.coprime_to_last_divisor && !v.stable)
                throw consistency_error("coprimality sufficiency violated for class gcd=" +
                                        m.get_str());
            if (v.stable && cr.divides_first_divisor)
                throw consistency_error("divisibility necessity violated for class gcd=" +
                                        m.get_str());
            cr.sufficiency_converse_fails = v.stable && !cr.coprime_to_last_divisor;
            cr.necessity_converse_fails = !v.stable && !cr.divides_first_divisor;
        }
        report.classes.push_back(std::move(cr));
    }
    return report;
}

}  // namespace zqcode
