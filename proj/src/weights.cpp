#include "zqcode/weights.hpp"

#include <stdexcept>

namespace zqcode {

int MinWeight::value() const {
    if (is_infinite()) throw std::logic_error("infinite minimum weight has no value");
    return w_;
}

MinWeight min_weight_of(const WeightDistribution& dist) {
    for (std::size_t i = 1; i < dist.counts.size(); ++i)
        if (dist.counts[i] != 0) return MinWeight::finite(static_cast<int>(i));
    return MinWeight::infinite();
}

}  // namespace zqcode
