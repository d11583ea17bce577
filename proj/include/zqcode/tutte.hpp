#pragma once

#include <map>

#include "zqcode/polynomial.hpp"
#include "zqcode/profile.hpp"
#include "zqcode/quasi.hpp"

namespace zqcode {

/// Corank-nullity subset expansion weighted by torsion gcd factors, one
/// bivariate constituent per divisor class of rho0. The constituent keyed by
/// m applies when gcd((u-1)(v-1), rho0) = m; (u-1)(v-1) = 0 selects the rho0
/// class, whose gcd factors equal the divisors themselves (the arithmetic
/// Tutte polynomial).
struct TutteQuasi {
    BigInt period = 1;
    std::map<BigInt, BiPoly> constituents;

    bool operator==(const TutteQuasi& other) const = default;
};

TutteQuasi tutte_quasi(const DivisorProfile& profile);

/// Exact evaluation; (u-1)(v-1) must be an integer, otherwise the value is
/// undefined here and a std::domain_error is raised.
Rational tutte_eval(const TutteQuasi& tq, const Rational& u, const Rational& v);

struct GreeneCheck {
    bool ok = false;
    Rational lhs;
    Rational rhs;
};

/// W(x,y;q) == y^(n-r) (x-y)^r / prod gcd(q, e_{l,E}) * Q((x+(q-1)y)/(x-y), x/y).
GreeneCheck greene_forward_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const TutteQuasi& tq, const BigInt& q, const Rational& x,
                                 const Rational& y);

/// Q(u,v) == prod gcd(N, e_{l,E}) / (v-1)^r * W(v, 1; N) with N = (u-1)(v-1) >= 1.
GreeneCheck greene_inverse_check(const DivisorProfile& profile, const WeightQuasi& wq,
                                 const TutteQuasi& tq, const BigInt& u, const BigInt& v);

}  // namespace zqcode
