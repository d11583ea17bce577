#pragma once

#include <map>
#include <vector>

#include "zqcode/polynomial.hpp"
#include "zqcode/profile.hpp"
#include "zqcode/weights.hpp"

namespace zqcode {

/// Quasi-polynomial with the gcd property: one constituent per positive
/// divisor m of the period, and evaluation at q selects gcd(q, period).
struct QuasiPolynomial {
    BigInt period = 1;
    std::map<BigInt, UniPoly> constituents;

    const UniPoly& constituent_for(const BigInt& q) const;
    Rational eval(const BigInt& q) const { return constituent_for(q).eval(q); }

    bool operator==(const QuasiPolynomial& other) const = default;
};

/// The weight-enumerator quasi-polynomial: for each divisor class m of rho0,
/// the constituent polynomials f_i (i = 0..n) with A_i(q) = f_i(q) on the
/// class gcd(q, rho0) = m.
struct WeightQuasi {
    int n = 0;
    int rank = 0;
    BigInt rho0 = 1;
    std::map<BigInt, std::vector<UniPoly>> constituents;

    const std::vector<UniPoly>& class_for(const BigInt& q) const;
    const std::vector<UniPoly>& class_exact(const BigInt& m) const;
    QuasiPolynomial weight_component(int i) const;

    bool operator==(const WeightQuasi& other) const = default;
};

struct QuasiOptions {
    int jobs = 1;
};

/// Assembles all constituents from the divisor table with a superset Moebius
/// transform: O(n * 2^n) ring operations per class instead of the 3^n sum.
/// Requires the divisor classes of rho0 to be enumerable (budget_error when
/// rho0 has more than the profile's materialization cap).
WeightQuasi weight_quasi(const DivisorProfile& profile, const QuasiOptions& options = {});

/// The constituents f_0..f_n of the single class gcd(q, rho0), computed on
/// demand; works for any rho0, however many divisors it has.
std::vector<UniPoly> weight_class(const DivisorProfile& profile, const BigInt& q);

/// Evaluates the class of q; every count is checked to be a nonnegative
/// integer and the total mass to be q^k / |H_E(q)| (consistency_error if not).
WeightDistribution weight_distribution(const DivisorProfile& profile, const WeightQuasi& wq,
                                       const BigInt& q);
/// Same, computing just the needed class on the fly.
WeightDistribution weight_distribution(const DivisorProfile& profile, const BigInt& q);

/// The homogeneous enumerator sum_i A_i(q) x^(n-i) y^i.
BiPoly weight_enumerator(const DivisorProfile& profile, const WeightQuasi& wq, const BigInt& q);
BiPoly enumerator_from_distribution(const WeightDistribution& dist);

/// Count of points avoiding all hyperplanes, as a quasi-polynomial:
/// chi^m(t) = f_n^m(t) * prod gcd(m, e_{l,E}) * t^(k - r(E)). Every
/// constituent is checked monic with integer coefficients.
QuasiPolynomial characteristic_quasi(const DivisorProfile& profile, const WeightQuasi& wq);

/// Smallest divisor of the stored period that is itself a period.
BigInt minimum_period(const QuasiPolynomial& qp);
BigInt minimum_period(const WeightQuasi& wq);

/// Indices i_0 < i_1 < ... < i_r(E) with i_s the first weight whose
/// constituent has degree s; cross-checked against the maximal-subset
/// characterization from the divisor table.
std::vector<int> degree_ladder(const DivisorProfile& profile, const WeightQuasi& wq,
                               const BigInt& m);

}  // namespace zqcode
