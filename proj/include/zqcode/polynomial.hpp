#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zqcode/rational.hpp"

namespace zqcode {

/// Univariate polynomial over the rationals, dense coefficients indexed by
/// degree, canonical form (no trailing zero coefficient; empty == zero).
/// Immutable value type: every operation returns a new polynomial.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rational& value);
    static UniPoly monomial(const Rational& coeff, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int deg) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& t) const;
    Rational eval(const BigInt& t) const { return eval(Rational(t)); }

    bool is_integral() const;
    bool is_monic() const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly scaled(const Rational& factor) const;
    UniPoly shifted(int degrees) const;  // multiply by t^degrees

    /// Exact division by t; throws consistency_error if the constant term is nonzero.
    UniPoly divided_by_t() const;

    bool operator==(const UniPoly& other) const = default;

    /// Human-readable form, e.g. "q^2 - 4*q + 3" or "3/4*q - 2".
    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly operator*(const Rational& factor, const UniPoly& p);

/// Sparse bivariate polynomial over the rationals; keys are (deg_x, deg_y),
/// zero coefficients never stored.
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly monomial(const Rational& coeff, int dx, int dy);

    void add_term(int dx, int dy, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int dx, int dy) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational eval(const Rational& x, const Rational& y) const;

    BiPoly operator+(const BiPoly& other) const;
    BiPoly operator-(const BiPoly& other) const;
    BiPoly operator*(const BiPoly& other) const;
    BiPoly scaled(const Rational& factor) const;

    bool operator==(const BiPoly& other) const = default;

    std::string str(const std::string& x = "x", const std::string& y = "y") const;

  private:
    std::map<Key, Rational> terms_;
};

}  // namespace zqcode
