#include "zqcode/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace zqcode {

BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt binomial(unsigned long n, unsigned long r) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
    return p;
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return p;  // base canonical => base^e canonical
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("bad rational (zero denominator): '" + text + "'");
    r.canonicalize();
    return r;
}

BigInt parse_bigint(const std::string& text) {
    BigInt v;
    if (v.set_str(text, 10) != 0) throw std::invalid_argument("bad integer: '" + text + "'");
    return v;
}

namespace {

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

BigInt pollard_rho(const BigInt& n) {
    // n composite, odd, not a prime power of a tiny prime.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        BigInt c = rng.get_z_range(n - 1) + 1;
        BigInt x = rng.get_z_range(n);
        BigInt y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd_int(x - y, n);
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::vector<std::pair<BigInt, unsigned>>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
    if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
    std::vector<std::pair<BigInt, unsigned>> factors;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) factors.emplace_back(BigInt(p), e);
    }
    unsigned long p = 17;
    while (n > 1 && BigInt(p) * p <= n && p < 100000) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) factors.emplace_back(BigInt(p), e);
        p += 2;
    }
    if (n > 1) {
        std::vector<std::pair<BigInt, unsigned>> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            unsigned e = 0;
            while (j < rest.size() && rest[j].first == rest[i].first) e += rest[j++].second;
            factors.emplace_back(rest[i].first, e);
            i = j;
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<BigInt> divisors_of(const BigInt& n) {
    auto factors = factorize(n);
    std::vector<BigInt> divs{1};
    for (const auto& [prime, exp] : factors) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace zqcode
