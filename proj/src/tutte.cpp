#include "zqcode/tutte.hpp"

#include <bit>
#include <stdexcept>

#include "zqcode/errors.hpp"

namespace zqcode {

TutteQuasi tutte_quasi(const DivisorProfile& profile) {
    TutteQuasi tq;
    tq.period = profile.lcm_period();
    const int n = profile.ground_size();
    const int r = profile.full_rank();
    const std::size_t table = std::size_t(1) << n;

    for (const BigInt& m : profile.period_divisors()) {
        BiPoly qpoly;
        for (std::size_t mask = 0; mask < table; ++mask) {
            const std::uint32_t k = static_cast<std::uint32_t>(mask);
            const BigInt factor = profile.gcd_product(k, m);
            const int a = r - profile.rank(k);                  // corank exponent on (u-1)
            const int b = std::popcount(mask) - profile.rank(k);  // nullity exponent on (v-1)
            for (int da = 0; da <= a; ++da)
                for (int db = 0; db <= b; ++db) {
                    BigInt c = factor * binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(da)) *
                               binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(db));
                    if ((a - da + b - db) % 2) c = -c;
                    qpoly.add_term(da, db, Rational(c));
                }
        }
        tq.constituents.emplace(m, std::move(qpoly));
    }
    return tq;
}

namespace {

const BiPoly& constituent_for_shift(const TutteQuasi& tq, const Rational& u, const Rational& v) {
    const Rational shift = (u - 1) * (v - 1);
    if (!is_integer(shift))
        throw std::domain_error("(u-1)(v-1) = " + to_string(shift) +
                                " is not an integer; the quasi-polynomial is undefined there");
    const BigInt nval = abs(shift.get_num());
    const BigInt key = nval == 0 ? tq.period : gcd_int(nval, tq.period);
    auto it = tq.constituents.find(key);
    if (it == tq.constituents.end())
        throw consistency_error("missing constituent for class gcd=" + key.get_str());
    return it->second;
}

Rational kernel_gcd_factor(const DivisorProfile& profile, const BigInt& q) {
    return Rational(profile.gcd_product(profile.full_mask(), q));
}

}  // namespace

Rational tutte_eval(const TutteQuasi& tq, const Rational& u, const Rational& v) {
    return constituent_for_shift(tq, u, v).eval(u, v);
}

GreeneCheck greene_forward_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const TutteQuasi& tq, const BigInt& q, const Rational& x,
                                 const Rational& y) {
    if (y == 0 || x == y) throw std::invalid_argument("forward identity needs y != 0 and x != y");
    if (q < 1) throw std::invalid_argument("modulus q must be positive");

    GreeneCheck check;
    const BiPoly w = weight_enumerator(profile, wq, q);
    check.lhs = w.eval(x, y);

    const Rational u = (x + Rational(q - 1) * y) / (x - y);
    const Rational v = x / y;
    const int n = profile.ground_size();
    const int r = profile.full_rank();
    check.rhs = pow_rational(y, static_cast<unsigned long>(n - r)) *
                pow_rational(x - y, static_cast<unsigned long>(r)) / kernel_gcd_factor(profile, q) *
                tutte_eval(tq, u, v);
    check.ok = check.lhs == check.rhs;
    return check;
}

GreeneCheck greene_inverse_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const TutteQuasi& tq, const BigInt& u, const BigInt& v) {
    if (v == 1) throw std::invalid_argument("inverse identity needs v != 1");
    const BigInt shift = (u - 1) * (v - 1);
    if (shift < 1) throw std::invalid_argument("inverse identity needs (u-1)(v-1) >= 1");

    GreeneCheck check;
    check.lhs = tutte_eval(tq, Rational(u), Rational(v));
    const BiPoly w = weight_enumerator(profile, wq, shift);
    check.rhs = kernel_gcd_factor(profile, shift) /
                pow_rational(Rational(v - 1), static_cast<unsigned long>(profile.full_rank())) *
                w.eval(Rational(v), Rational(1));
    check.ok = check.lhs == check.rhs;
    return check;
}

}  // namespace zqcode
