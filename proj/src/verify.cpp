#include "zqcode/verify.hpp"

#include <bit>
#include <sstream>

#include "zqcode/errors.hpp"
#include "zqcode/minweight.hpp"
#include "zqcode/oracle.hpp"
#include "zqcode/tutte.hpp"

namespace zqcode {

bool VerifyOutcome::ok() const {
    for (const auto& line : lines)
        if (!line.ok) return false;
    return true;
}

void VerifyOutcome::add(const std::string& check, bool passed, const std::string& detail) {
    lines.push_back({check, passed, passed ? "" : detail});
}

namespace {

std::string dist_str(const std::vector<BigInt>& counts) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i].get_str();
    os << ")";
    return os.str();
}

void check_profile_invariants(const DivisorProfile& p, VerifyOutcome& out) {
    const int n = p.ground_size();
    const std::size_t table = std::size_t(1) << n;
    std::string detail;

    bool monotone = true;
    bool chain_ok = true;
    for (std::size_t mask = 0; mask < table && monotone && chain_ok; ++mask) {
        const auto chain = p.chain(static_cast<std::uint32_t>(mask));
        for (std::size_t l = 1; l < chain.divisors.size(); ++l)
            if (chain.divisors[l] % chain.divisors[l - 1] != 0) {
                chain_ok = false;
                detail = "chain broken at mask " + std::to_string(mask);
            }
        for (int b = 0; b < n; ++b) {
            const std::size_t super = mask | (std::size_t(1) << b);
            if (p.rank(static_cast<std::uint32_t>(super)) < p.rank(static_cast<std::uint32_t>(mask))) {
                monotone = false;
                detail = "rank drops from mask " + std::to_string(mask);
            }
        }
    }
    out.add("divisor chains valid", chain_ok, detail);
    out.add("rank monotone under inclusion", monotone, detail);

    // Both divisibility invariants on nested pairs J = mask minus one element.
    bool products_ok = true;
    bool gcd_products_ok = true;
    for (std::size_t mask = 1; mask < table && (products_ok || gcd_products_ok); ++mask) {
        const auto big = p.chain(static_cast<std::uint32_t>(mask));
        for (int b = 0; b < n; ++b) {
            if (!(mask >> b & 1u)) continue;
            const std::uint32_t sub = static_cast<std::uint32_t>(mask) & ~(1u << b);
            const auto small = p.chain(sub);
            BigInt prod_small = 1, prod_big = 1;
            for (int l = 0; l < small.rank; ++l) {
                prod_small *= small.divisors[static_cast<std::size_t>(l)];
                prod_big *= big.divisors[static_cast<std::size_t>(l)];
                if (prod_small % prod_big != 0) {
                    products_ok = false;
                    detail = "divisor-product divisibility fails at mask " + std::to_string(mask);
                }
            }
            for (const BigInt& q : {BigInt(2), BigInt(3), BigInt(4), BigInt(6), BigInt(12)}) {
                BigInt g_small = 1, g_big = 1;
                for (int l = 0; l < small.rank; ++l) {
                    g_small *= gcd_int(q, small.divisors[static_cast<std::size_t>(l)]);
                    g_big *= gcd_int(q, big.divisors[static_cast<std::size_t>(l)]);
                }
                if (g_small % g_big != 0) {
                    gcd_products_ok = false;
                    detail = "gcd-product divisibility fails at mask " + std::to_string(mask);
                }
            }
        }
    }
    out.add("divisor-product divisibility", products_ok, detail);
    out.add("gcd-product divisibility", gcd_products_ok, detail);
}

}  // namespace

VerifyOutcome verify_matrix(const IntMatrix& g, const VerifyOptions& options) {
    VerifyOutcome out;
    const DivisorProfile profile = build_profile(g, {.max_columns = 26, .jobs = options.jobs});
    const WeightQuasi wq = weight_quasi(profile, {.jobs = options.jobs});

    check_profile_invariants(profile, out);

    // Oracle equivalence, kernel sizes, and reduction monotonicity.
    {
        bool dist_ok = true, kernel_ok = true, reduction_ok = true;
        std::string detail;
        std::vector<WeightDistribution> dists;
        for (BigInt q = 1; q <= options.max_q && dist_ok; ++q) {
            OracleResult oracle;
            try {
                oracle = oracle_enumerate(g, q, {.budget = options.oracle_budget, .jobs = options.jobs});
            } catch (const budget_error&) {
                break;  // verify as far as the enumeration budget allows
            }
            const WeightDistribution dist = weight_distribution(profile, wq, q);
            dists.push_back(dist);
            if (oracle.distribution.counts != dist.counts) {
                dist_ok = false;
                detail = "q=" + q.get_str() + ": pipeline " + dist_str(dist.counts) + " oracle " +
                         dist_str(oracle.distribution.counts);
            }
            if (oracle.kernel_size != profile.h_subgroup_size(profile.full_mask(), q)) {
                kernel_ok = false;
                detail = "kernel size mismatch at q=" + q.get_str();
            }
        }
        for (std::size_t qi = 0; qi < dists.size() && reduction_ok; ++qi)
            for (std::size_t mi = 0; mi < qi; ++mi) {
                if (dists[qi].q % dists[mi].q != 0) continue;
                for (std::size_t i = 1; i < dists[mi].counts.size(); ++i)
                    if (dists[mi].counts[i] != 0 && dists[qi].counts[i] == 0) {
                        reduction_ok = false;
                        detail = "weight " + std::to_string(i) + " vanishes from q=" +
                                 dists[mi].q.get_str() + " to q=" + dists[qi].q.get_str();
                        break;
                    }
            }
        out.add("oracle equivalence (q <= " + std::to_string(options.max_q) + ")", dist_ok, detail);
        out.add("kernel size matches subgroup formula", kernel_ok, detail);
        out.add("weights at m survive at multiples q", reduction_ok);
    }

    // Always-on guards exercised across classes.
    {
        bool ok = true;
        std::string detail;
        try {
            characteristic_quasi(profile, wq);
            for (const BigInt& m : profile.period_divisors()) {
                degree_ladder(profile, wq, m);
                generic_min_weight(profile, wq, m);
                stability_check(profile, wq, m);
            }
            min_weight_report(profile, wq);
            minimum_period(wq);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out.add("constituent guards (monic chi, ladder, stability, constancy)", ok, detail);
    }

    if (options.greene) {
        const TutteQuasi tq = tutte_quasi(profile);
        bool fwd_ok = true, inv_ok = true;
        std::string detail;
        const std::pair<int, int> points[] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}};
        for (BigInt q = 1; q <= std::min(options.max_q, 8) && fwd_ok; ++q)
            for (const auto& [x, y] : points) {
                const GreeneCheck check =
                    greene_forward_check(profile, wq, tq, q, Rational(x), Rational(y));
                if (!check.ok) {
                    fwd_ok = false;
                    detail = "forward q=" + q.get_str() + " (x,y)=(" + std::to_string(x) + "," +
                             std::to_string(y) + "): " + to_string(check.lhs) +
                             " != " + to_string(check.rhs);
                    break;
                }
            }
        for (BigInt u = 2; u <= 4 && inv_ok; ++u)
            for (BigInt v = 2; v <= 4; ++v) {
                const GreeneCheck check = greene_inverse_check(profile, wq, tq, u, v);
                if (!check.ok) {
                    inv_ok = false;
                    detail = "inverse (u,v)=(" + u.get_str() + "," + v.get_str() + ")";
                    break;
                }
            }
        out.add("forward enumerator/Tutte identity", fwd_ok, detail);
        out.add("inverse enumerator/Tutte identity", inv_ok, detail);
    }
    return out;
}

VerifyOutcome verify_against_golden(const GoldenFixture& fixture, const VerifyOptions& options) {
    VerifyOutcome out = verify_matrix(fixture.matrix, options);
    const DivisorProfile profile = build_profile(fixture.matrix, {.jobs = options.jobs});
    const WeightQuasi computed = weight_quasi(profile, {.jobs = options.jobs});
    std::string detail;
    bool same = computed == fixture.weight_quasi;
    if (!same) {
        if (computed.rho0 != fixture.weight_quasi.rho0) {
            detail = "rho0 " + computed.rho0.get_str() + " != " + fixture.weight_quasi.rho0.get_str();
        } else {
            for (const auto& [m, expected] : fixture.weight_quasi.constituents) {
                const auto& got = computed.class_exact(m);
                for (std::size_t i = 0; i < expected.size(); ++i)
                    if (got[i] != expected[i] && detail.empty())
                        detail = "class gcd=" + m.get_str() + ", weight " + std::to_string(i) +
                                 ": computed " + got[i].str("q") + ", expected " +
                                 expected[i].str("q");
            }
            if (detail.empty()) detail = "constituent class sets differ";
        }
    }
    out.add("golden constituents (" + fixture.name + ")", same, detail);
    return out;
}

}  // namespace zqcode
