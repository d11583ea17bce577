#pragma once

#include <string>

#include "zqcode/matrix.hpp"
#include "zqcode/quasi.hpp"
#include "zqcode/weights.hpp"

namespace zqcode {

/// The two matroid families: N_k represented by (I_k | J_k - I_k) and Z_k
/// (the binary k-spike) by the same matrix with an all-ones column appended.
enum class FamilyTag { N, Z };

FamilyTag parse_family_tag(const std::string& text);
std::string family_tag_name(FamilyTag tag);

struct FamilySpec {
    FamilyTag tag;
    int k;
    IntMatrix generator;    // the (0,1) representation
    IntMatrix transformed;  // unimodular row-equivalent, signed-column-permuted form
};

/// Builds both generator forms (k >= 2) and verifies the transformed form
/// really is Q * G * P * D for the unimodular triple, so both matrices
/// generate codes with identical weight enumerators at every q.
FamilySpec make_family(FamilyTag tag, int k);

/// Closed-form count of full-support codewords at q, exact integer arithmetic
/// with a hard failure if the division by q leaves a remainder.
BigInt char_quasi_closed(FamilyTag tag, int k, const BigInt& q);

/// The same closed form packaged per divisor class of lcm(1..k-1).
QuasiPolynomial closed_char_quasi(FamilyTag tag, int k);

/// True iff the distribution shows none of the forbidden weights: no odd
/// weight < k (N) resp. <= k (Z), and no weight 2 unless k = 2.
bool parity_obstruction(FamilyTag tag, int k, const WeightDistribution& dist);

/// Minimum weight of the family code, independent of q >= 2.
int family_min_weight(FamilyTag tag, int k);

}  // namespace zqcode
