#include "zqcode/quasi.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "zqcode/errors.hpp"
#include "zqcode/parallel.hpp"

namespace zqcode {

const UniPoly& QuasiPolynomial::constituent_for(const BigInt& q) const {
    const BigInt key = gcd_int(q, period);
    auto it = constituents.find(key);
    if (it == constituents.end())
        throw consistency_error("missing constituent for class gcd=" + key.get_str());
    return it->second;
}

const std::vector<UniPoly>& WeightQuasi::class_for(const BigInt& q) const {
    return class_exact(gcd_int(q, rho0));
}

const std::vector<UniPoly>& WeightQuasi::class_exact(const BigInt& m) const {
    auto it = constituents.find(m);
    if (it == constituents.end())
        throw std::invalid_argument("no constituent class gcd=" + m.get_str());
    return it->second;
}

QuasiPolynomial WeightQuasi::weight_component(int i) const {
    if (i < 0 || i > n) throw std::out_of_range("weight index out of range");
    QuasiPolynomial qp;
    qp.period = rho0;
    for (const auto& [m, f] : constituents) qp.constituents.emplace(m, f[static_cast<std::size_t>(i)]);
    return qp;
}

namespace {

void accumulate(BigInt& acc, long long v) { acc += static_cast<long>(v); }
void accumulate(BigInt& acc, const BigInt& v) { acc += v; }

long long narrow(const BigInt& v) { return static_cast<long long>(v.get_si()); }
const BigInt& widen(const BigInt& v) { return v; }

// Superset Moebius transform of the monomial table
//   B_K = chain_prod[K] * t^(r(E) - r(K))
// computed in place, then collected by subset size:
//   raw[i][d] = sum_{|J| = n-i} sum_{K >= J} (-1)^{|K|-|J|} [t^d] B_K.
template <typename I>
std::vector<std::vector<BigInt>> moebius_collect(const DivisorProfile& p,
                                                 const std::vector<BigInt>& chain_prod) {
    const int n = p.ground_size();
    const int width = p.full_rank() + 1;
    const std::size_t table = std::size_t(1) << n;
    std::vector<I> t(table * static_cast<std::size_t>(width), I(0));
    for (std::size_t mask = 0; mask < table; ++mask) {
        const int deg = p.full_rank() - p.rank(static_cast<std::uint32_t>(mask));
        if constexpr (std::is_same_v<I, long long>)
            t[mask * width + deg] = narrow(chain_prod[p.torsion_id(static_cast<std::uint32_t>(mask))]);
        else
            t[mask * width + deg] = widen(chain_prod[p.torsion_id(static_cast<std::uint32_t>(mask))]);
    }
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t(1) << b;
        for (std::size_t mask = 0; mask < table; ++mask) {
            if (mask & bit) continue;
            I* lo = &t[mask * width];
            const I* hi = &t[(mask | bit) * width];
            for (int d = 0; d < width; ++d) lo[d] -= hi[d];
        }
    }
    std::vector<std::vector<BigInt>> raw(static_cast<std::size_t>(n) + 1,
                                         std::vector<BigInt>(width, BigInt(0)));
    for (std::size_t mask = 0; mask < table; ++mask) {
        auto& row = raw[static_cast<std::size_t>(n) - std::popcount(mask)];
        const I* src = &t[mask * width];
        for (int d = 0; d < width; ++d)
            if (src[d] != 0) accumulate(row[d], src[d]);
    }
    return raw;
}

std::vector<UniPoly> class_constituents(const DivisorProfile& p,
                                        const std::vector<BigInt>& chain_prod) {
    const int n = p.ground_size();
    const int width = p.full_rank() + 1;
    const BigInt& denom = chain_prod[p.torsion_id(p.full_mask())];

    BigInt total = 0;
    const std::size_t table = std::size_t(1) << n;
    for (std::size_t mask = 0; mask < table; ++mask)
        total += chain_prod[p.torsion_id(static_cast<std::uint32_t>(mask))];

    // Every intermediate of the transform is a signed sum of distinct table
    // entries, so the total bounds them all.
    static const BigInt kI64Cap = BigInt(1) << 62;
    const auto raw = (total < kI64Cap) ? moebius_collect<long long>(p, chain_prod)
                                       : moebius_collect<BigInt>(p, chain_prod);

    std::vector<UniPoly> f;
    f.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<Rational> coeffs(width);
        for (int d = 0; d < width; ++d) coeffs[d] = make_rational(raw[i][d], denom);
        f.emplace_back(std::move(coeffs));
    }

    if (f[0] != UniPoly::constant(1))
        throw consistency_error("weight-0 constituent is not 1");
    UniPoly mass;
    for (const auto& fi : f) mass = mass + fi;
    if (mass != UniPoly::monomial(make_rational(1, denom), p.full_rank()))
        throw consistency_error("constituent mass does not equal t^r / |H_E|");
    return f;
}

}  // namespace

std::vector<UniPoly> weight_class(const DivisorProfile& profile, const BigInt& q) {
    if (q < 1) throw std::invalid_argument("modulus q must be positive");
    const BigInt m = gcd_int(q, profile.lcm_period());
    std::vector<BigInt> prods;
    prods.reserve(profile.torsion_pool().size());
    for (const auto& chain : profile.torsion_pool()) {
        BigInt prod = 1;
        for (const BigInt& e : chain) prod *= gcd_int(m, e);
        prods.push_back(std::move(prod));
    }
    return class_constituents(profile, prods);
}

WeightQuasi weight_quasi(const DivisorProfile& profile, const QuasiOptions& options) {
    WeightQuasi wq;
    wq.n = profile.ground_size();
    wq.rank = profile.full_rank();
    wq.rho0 = profile.lcm_period();

    const auto& classes = profile.period_divisors();
    const auto& pool = profile.torsion_pool();

    // Classes with identical gcd products on every distinct chain share their
    // constituents; compute one representative per signature.
    std::vector<std::vector<BigInt>> prods(classes.size());
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        prods[ci].reserve(pool.size());
        for (const auto& chain : pool) {
            BigInt prod = 1;
            for (const BigInt& e : chain) prod *= gcd_int(classes[ci], e);
            prods[ci].push_back(std::move(prod));
        }
    }
    std::map<const std::vector<BigInt>*, std::size_t,
             decltype([](const std::vector<BigInt>* a, const std::vector<BigInt>* b) { return *a < *b; })>
        seen;
    std::vector<std::size_t> rep_of(classes.size());
    std::vector<std::size_t> reps;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        auto [it, fresh] = seen.emplace(&prods[ci], ci);
        rep_of[ci] = it->second;
        if (fresh) reps.push_back(ci);
    }

    std::vector<std::vector<UniPoly>> results(classes.size());
    parallel_chunks(options.jobs, reps.size(), [&](std::size_t first, std::size_t last) {
        for (std::size_t g = first; g < last; ++g)
            results[reps[g]] = class_constituents(profile, prods[reps[g]]);
    });
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        wq.constituents.emplace(classes[ci], results[rep_of[ci]]);
    return wq;
}

namespace {

WeightDistribution distribution_from_class(const DivisorProfile& profile,
                                           const std::vector<UniPoly>& f, const BigInt& q);

}  // namespace

WeightDistribution weight_distribution(const DivisorProfile& profile, const WeightQuasi& wq,
                                       const BigInt& q) {
    if (q < 1) throw std::invalid_argument("modulus q must be positive");
    return distribution_from_class(profile, wq.class_for(q), q);
}

WeightDistribution weight_distribution(const DivisorProfile& profile, const BigInt& q) {
    if (q < 1) throw std::invalid_argument("modulus q must be positive");
    return distribution_from_class(profile, weight_class(profile, q), q);
}

namespace {

WeightDistribution distribution_from_class(const DivisorProfile& profile,
                                           const std::vector<UniPoly>& f, const BigInt& q) {
    WeightDistribution dist;
    dist.q = q;
    dist.counts.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational v = f[i].eval(q);
        if (!is_integer(v) || v < 0)
            throw consistency_error("count A_" + std::to_string(i) + "(" + q.get_str() +
                                    ") = " + to_string(v) + " is not a nonnegative integer");
        dist.counts.push_back(v.get_num());
    }
    if (dist.counts[0] != 1) throw consistency_error("A_0 must be 1");
    BigInt mass = 0;
    for (const auto& c : dist.counts) mass += c;
    if (mass * profile.h_subgroup_size(profile.full_mask(), q) !=
        pow_int(q, static_cast<unsigned long>(profile.row_count())))
        throw consistency_error("mass check failed at q=" + q.get_str());
    return dist;
}

}  // namespace

BiPoly enumerator_from_distribution(const WeightDistribution& dist) {
    BiPoly w;
    const int n = static_cast<int>(dist.counts.size()) - 1;
    for (int i = 0; i <= n; ++i) w.add_term(n - i, i, Rational(dist.counts[static_cast<std::size_t>(i)]));
    return w;
}

BiPoly weight_enumerator(const DivisorProfile& profile, const WeightQuasi& wq, const BigInt& q) {
    return enumerator_from_distribution(weight_distribution(profile, wq, q));
}

QuasiPolynomial characteristic_quasi(const DivisorProfile& profile, const WeightQuasi& wq) {
    QuasiPolynomial qp;
    qp.period = wq.rho0;
    const int codim = profile.row_count() - profile.full_rank();
    for (const auto& [m, f] : wq.constituents) {
        const BigInt scale = profile.gcd_product(profile.full_mask(), m);
        UniPoly chi = f[static_cast<std::size_t>(wq.n)].scaled(Rational(scale)).shifted(codim);
        if (!chi.is_monic() || !chi.is_integral() || chi.degree() != profile.row_count())
            throw consistency_error("characteristic constituent for gcd=" + m.get_str() +
                                    " is not monic of degree k over Z: " + chi.str());
        qp.constituents.emplace(m, std::move(chi));
    }
    return qp;
}

namespace {

// Smallest divisor d of the period such that classes sharing a residue mod d
// always carry equal constituents. `eq` compares class indices.
BigInt minimum_period_scan(const BigInt& period, const std::vector<BigInt>& keys,
                           const std::function<bool(std::size_t, std::size_t)>& eq) {
    if (period == 1) return 1;
    if (period > 10'000'000)
        throw budget_error("period " + period.get_str() + " too large for minimum-period scan");
    const unsigned long rho = period.get_ui();

    std::vector<std::size_t> class_of(rho + 1);
    for (unsigned long c = 1; c <= rho; ++c) {
        const BigInt g = gcd_int(BigInt(c), period);
        const auto it = std::lower_bound(keys.begin(), keys.end(), g);
        if (it == keys.end() || *it != g)
            throw consistency_error("constituent classes are not the divisors of the period");
        class_of[c] = static_cast<std::size_t>(it - keys.begin());
    }

    std::map<std::pair<std::size_t, std::size_t>, bool> memo;
    auto equal_classes = [&](std::size_t a, std::size_t b) {
        if (a == b) return true;
        if (a > b) std::swap(a, b);
        auto it = memo.find({a, b});
        if (it == memo.end()) it = memo.emplace(std::make_pair(a, b), eq(a, b)).first;
        return it->second;
    };

    for (const BigInt& div : divisors_of(period)) {
        const unsigned long d = div.get_ui();
        bool good = true;
        for (unsigned long r = 0; r < d && good; ++r) {
            std::size_t first = std::numeric_limits<std::size_t>::max();
            for (unsigned long c = (r == 0 ? d : r); c <= rho; c += d) {
                if (first == std::numeric_limits<std::size_t>::max()) {
                    first = class_of[c];
                } else if (!equal_classes(first, class_of[c])) {
                    good = false;
                    break;
                }
            }
        }
        if (good) return div;
    }
    return period;
}

}  // namespace

BigInt minimum_period(const QuasiPolynomial& qp) {
    std::vector<BigInt> keys;
    std::vector<const UniPoly*> vals;
    for (const auto& [m, poly] : qp.constituents) {
        keys.push_back(m);
        vals.push_back(&poly);
    }
    return minimum_period_scan(qp.period, keys,
                               [&](std::size_t a, std::size_t b) { return *vals[a] == *vals[b]; });
}

BigInt minimum_period(const WeightQuasi& wq) {
    std::vector<BigInt> keys;
    std::vector<const std::vector<UniPoly>*> vals;
    for (const auto& [m, f] : wq.constituents) {
        keys.push_back(m);
        vals.push_back(&f);
    }
    return minimum_period_scan(wq.rho0, keys,
                               [&](std::size_t a, std::size_t b) { return *vals[a] == *vals[b]; });
}

std::vector<int> degree_ladder(const DivisorProfile& profile, const WeightQuasi& wq,
                               const BigInt& m) {
    const auto& f = wq.class_exact(m);
    const int r = wq.rank;
    const int n = wq.n;

    std::vector<int> ladder(static_cast<std::size_t>(r) + 1, -1);
    for (int s = 0; s <= r; ++s)
        for (int i = 0; i <= n; ++i)
            if (f[static_cast<std::size_t>(i)].degree() == s) {
                ladder[static_cast<std::size_t>(s)] = i;
                break;
            }
    for (int s = 0; s <= r; ++s) {
        if (ladder[static_cast<std::size_t>(s)] < 0)
            throw consistency_error("no constituent of degree " + std::to_string(s) +
                                    " in class gcd=" + m.get_str());
        if (s > 0 && ladder[static_cast<std::size_t>(s)] <= ladder[static_cast<std::size_t>(s) - 1])
            throw consistency_error("degree ladder not strictly increasing in class gcd=" +
                                    m.get_str());
    }

    // Independent characterization: i_s = n - max{|J| : r(E) - r(J) = s}.
    std::vector<int> max_size(static_cast<std::size_t>(r) + 1, -1);
    const std::size_t table = std::size_t(1) << n;
    for (std::size_t mask = 0; mask < table; ++mask) {
        const int s = r - profile.rank(static_cast<std::uint32_t>(mask));
        max_size[static_cast<std::size_t>(s)] =
            std::max(max_size[static_cast<std::size_t>(s)], std::popcount(mask));
    }
    for (int s = 0; s <= r; ++s)
        if (ladder[static_cast<std::size_t>(s)] != n - max_size[static_cast<std::size_t>(s)])
            throw consistency_error("degree ladder disagrees with maximal-subset characterization");
    return ladder;
}

}  // namespace zqcode
