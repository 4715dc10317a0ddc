#pragma once

#include <cstdint>
#include <vector>

namespace spdmean {

// xoshiro256** (Blackman & Vigna), seeded through splitmix64.  Chosen as a
// named, fully specified 64-bit generator so traces reproduce bit-for-bit
// across platforms; all mappings to doubles and indices below are explicit
// for the same reason.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64 step
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the paired variate is cached.
    double normal();

    // Uniform integer in [0, n); multiply-shift mapping with rejection of the
    // biased tail.
    int below(int n);

    // Index k with probability proportional to weights[k]; inverse-CDF scan
    // over the cumulative weights using a single uniform draw.
    int weighted_index(const std::vector<double>& cumulative);

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace spdmean
