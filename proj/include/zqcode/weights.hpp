#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zqcode/rational.hpp"

namespace zqcode {

/// Codeword counts by Hamming weight at a concrete modulus q.
struct WeightDistribution {
    BigInt q;
    std::vector<BigInt> counts;  // counts[i] = number of codewords of weight i

    bool operator==(const WeightDistribution& other) const = default;
};

/// A minimum weight: a positive integer, or infinite when the code is {0}.
/// Infinite compares greater than every finite weight.
class MinWeight {
  public:
    static MinWeight infinite() { return MinWeight(-1); }
    static MinWeight finite(int w) { return MinWeight(w); }

    bool is_infinite() const { return w_ < 0; }
    int value() const;

    friend bool operator==(const MinWeight& a, const MinWeight& b) = default;
    friend std::strong_ordering operator<=>(const MinWeight& a, const MinWeight& b) {
        if (a.w_ == b.w_) return std::strong_ordering::equal;
        if (a.is_infinite()) return std::strong_ordering::greater;
        if (b.is_infinite()) return std::strong_ordering::less;
        return a.w_ <=> b.w_;
    }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(w_); }

  private:
    explicit MinWeight(int w) : w_(w) {}
    int w_;
};

/// Smallest positive weight with a nonzero count, infinite when there is none.
MinWeight min_weight_of(const WeightDistribution& dist);

}  // namespace zqcode
