#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zqcode {

using BigInt = mpz_class;

/// Exact rational, always reduced with positive denominator (mpq_class keeps
/// results canonical; constructors from raw num/den must canonicalize).
using Rational = mpq_class;

/// gcd of absolute values, with gcd(0, b) = |b| and gcd(0, 0) = 0.
BigInt gcd_int(const BigInt& a, const BigInt& b);
BigInt lcm_int(const BigInt& a, const BigInt& b);

BigInt binomial(unsigned long n, unsigned long r);
BigInt pow_int(const BigInt& base, unsigned long e);
Rational pow_rational(const Rational& base, unsigned long e);

Rational make_rational(const BigInt& num, const BigInt& den);
bool is_integer(const Rational& r);

/// Serialized as "num/den", the "/den" omitted when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
Rational parse_rational(const std::string& text);
BigInt parse_bigint(const std::string& text);

/// Prime factorization (trial division + Miller-Rabin + Pollard rho), n >= 1.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);

/// All positive divisors of n >= 1, ascending.
std::vector<BigInt> divisors_of(const BigInt& n);

}  // namespace zqcode
