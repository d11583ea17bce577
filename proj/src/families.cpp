#include "zqcode/families.hpp"

#include <stdexcept>

#include "zqcode/errors.hpp"

namespace zqcode {

FamilyTag parse_family_tag(const std::string& text) {
    if (text == "n" || text == "N") return FamilyTag::N;
    if (text == "z" || text == "Z") return FamilyTag::Z;
    throw std::invalid_argument("unknown family tag '" + text + "' (expected n or z)");
}

std::string family_tag_name(FamilyTag tag) { return tag == FamilyTag::N ? "N" : "Z"; }

namespace {

IntMatrix raw_generator(FamilyTag tag, int k) {
    const int n = 2 * k + (tag == FamilyTag::Z ? 1 : 0);
    IntMatrix g(k, n);
    for (int i = 0; i < k; ++i) {
        g.at(i, i) = 1;
        for (int j = 0; j < k; ++j) g.at(i, k + j) = (i == j) ? 0 : 1;
        if (tag == FamilyTag::Z) g.at(i, 2 * k) = 1;
    }
    return g;
}

IntMatrix transformed_generator(FamilyTag tag, int k) {
    const int n = 2 * k + (tag == FamilyTag::Z ? 1 : 0);
    IntMatrix g(k, n);
    for (int i = 0; i < k - 1; ++i) {
        g.at(i, i) = 1;          // I_{k-1}
        g.at(i, k - 1) = 1;      // ones column
        g.at(i, k + i) = 1;      // I_{k-1} again
        g.at(i, 2 * k - 1) = 1;  // ones column
    }
    for (int j = k; j < 2 * k; ++j) g.at(k - 1, j) = 1;  // bottom row: zeros then ones
    if (tag == FamilyTag::Z) g.at(k - 1, 2 * k) = 1;     // appended column (0,..,0,1)^T
    return g;
}

// Row transform (I_{k-1}, -1; 0, -1), column permutation swapping columns k
// and 2k, and sign flips on the trailing block.
void check_unimodular_equivalence(const FamilySpec& spec) {
    const int k = spec.k;
    const int n = spec.generator.cols;
    IntMatrix q(k, k);
    for (int i = 0; i < k - 1; ++i) {
        q.at(i, i) = 1;
        q.at(i, k - 1) = -1;
    }
    q.at(k - 1, k - 1) = -1;

    IntMatrix pd(n, n);
    for (int j = 0; j < n; ++j) {
        const int target = (j == k - 1) ? 2 * k - 1 : (j == 2 * k - 1 ? k - 1 : j);
        pd.at(j, target) = (target >= k) ? -1 : 1;
    }
    if (matmul(matmul(q, spec.generator), pd) != spec.transformed)
        throw consistency_error("family transform does not reproduce the expected block form");
}

BigInt gcd_convention(long j_minus_1, const BigInt& q) {
    if (j_minus_1 == -1) return 1;
    if (j_minus_1 == 0) return q;
    return gcd_int(BigInt(j_minus_1), q);
}

BigInt lcm_upto(int bound) {
    BigInt l = 1;
    for (int i = 2; i <= bound; ++i) l = lcm_int(l, BigInt(i));
    return l;
}

UniPoly exact_poly_div_t(const UniPoly& p) { return p.divided_by_t(); }

}  // namespace

FamilySpec make_family(FamilyTag tag, int k) {
    if (k < 2) throw std::invalid_argument("family parameter k must be at least 2");
    FamilySpec spec{tag, k, raw_generator(tag, k), transformed_generator(tag, k)};
    check_unimodular_equivalence(spec);
    return spec;
}

BigInt char_quasi_closed(FamilyTag tag, int k, const BigInt& q) {
    if (k < 1 || q < 1) throw std::invalid_argument("need k >= 1 and q >= 1");
    const unsigned long uk = static_cast<unsigned long>(k);
    const BigInt sign = (k % 2 == 0) ? 1 : -1;

    BigInt numerator = (q - 1) * pow_int(q - 2, uk) - pow_int(BigInt(-2), uk) * (2 * q - 1);
    if (numerator % q != 0)
        throw consistency_error("closed-form numerator not divisible by q at q=" + q.get_str());
    BigInt value = numerator / q;

    BigInt gcd_sum = 0;
    for (int j = 0; j <= k; ++j)
        gcd_sum += binomial(uk, static_cast<unsigned long>(j)) * gcd_convention(j - 1, q);
    value += sign * gcd_sum;

    if (tag == FamilyTag::N) {
        BigInt extra = pow_int(q - 1, uk) + sign * (q - 1);
        if (extra % q != 0)
            throw consistency_error("closed-form numerator not divisible by q at q=" + q.get_str());
        value += extra / q;
    }
    return value;
}

QuasiPolynomial closed_char_quasi(FamilyTag tag, int k) {
    if (k < 2) throw std::invalid_argument("family parameter k must be at least 2");
    const unsigned long uk = static_cast<unsigned long>(k);
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    const UniPoly t = UniPoly::monomial(1, 1);
    const UniPoly one = UniPoly::constant(1);

    UniPoly z_poly_part;  // ((t-1)(t-2)^k - (-2)^k (2t-1)) / t
    {
        UniPoly p = t - one;
        UniPoly tm2 = t - UniPoly::constant(2);
        for (int i = 0; i < k; ++i) p = p * tm2;
        p = p - (2 * t - UniPoly::constant(1)).scaled(Rational(pow_int(BigInt(-2), uk)));
        z_poly_part = exact_poly_div_t(p);
    }
    UniPoly n_extra;  // ((t-1)^k + (-1)^k (t-1)) / t
    if (tag == FamilyTag::N) {
        UniPoly p = one;
        UniPoly tm1 = t - one;
        for (int i = 0; i < k; ++i) p = p * tm1;
        p = p + tm1.scaled(sign);
        n_extra = exact_poly_div_t(p);
    }

    QuasiPolynomial qp;
    qp.period = lcm_upto(k - 1);
    for (const BigInt& m : divisors_of(qp.period)) {
        // j = 0 contributes the constant 1, j = 1 the polynomial term t; for
        // j >= 2 the gcd depends on q only through gcd(j-1, m) since j-1
        // divides the period.
        UniPoly gcd_sum = one + t.scaled(Rational(binomial(uk, 1)));
        BigInt constants = 0;
        for (int j = 2; j <= k; ++j)
            constants += binomial(uk, static_cast<unsigned long>(j)) * gcd_int(BigInt(j - 1), m);
        gcd_sum = gcd_sum + UniPoly::constant(Rational(constants));

        UniPoly chi = z_poly_part + gcd_sum.scaled(sign);
        if (tag == FamilyTag::N) chi = chi + n_extra;
        qp.constituents.emplace(m, std::move(chi));
    }
    return qp;
}

bool parity_obstruction(FamilyTag tag, int k, const WeightDistribution& dist) {
    const int odd_bound = (tag == FamilyTag::Z) ? k : k - 1;  // odd weights up to this are forbidden
    for (int i = 1; i <= odd_bound && i < static_cast<int>(dist.counts.size()); i += 2)
        if (dist.counts[static_cast<std::size_t>(i)] != 0) return false;
    if (k != 2 && dist.counts.size() > 2 && dist.counts[2] != 0) return false;
    return true;
}

int family_min_weight(FamilyTag tag, int k) {
    if (k < 2) throw std::invalid_argument("family parameter k must be at least 2");
    if (k >= 4) return 4;
    return (tag == FamilyTag::N) ? k : k + 1;
}

}  // namespace zqcode
