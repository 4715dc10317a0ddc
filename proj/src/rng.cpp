#include "spdmean/rng.hpp"

#include <cmath>

namespace spdmean {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_normal_;
    }
    // u1 in (0,1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_normal_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

int Rng::below(int n) {
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw = next_u64();
    while (draw >= limit) draw = next_u64();
    return static_cast<int>(draw % bound);
}

int Rng::weighted_index(const std::vector<double>& cumulative) {
    const double u = uniform() * cumulative.back();
    for (size_t k = 0; k < cumulative.size(); ++k) {
        if (u < cumulative[k]) return static_cast<int>(k);
    }
    return static_cast<int>(cumulative.size()) - 1;
}

}  // namespace spdmean
