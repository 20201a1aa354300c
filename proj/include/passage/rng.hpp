// Reproducible per-path random streams.
//
// Each Monte Carlo path gets its own generator derived from (seed, path
// index) by splitmix64 mixing, so results are bit-identical regardless of
// how paths are distributed over workers or SIMD lanes. The normal sampler
// is a 128-layer ziggurat; exponentials come from inverse transform.
#pragma once

#include <cmath>
#include <cstdint>

namespace passage {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with state seeded from (seed, stream) via splitmix64.
class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream) {
        uint64_t sm = seed ^ (stream * 0xA0761D6478BD642FULL + 0xE7037ED1A0B428DBULL);
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in (0, 1)
    double next_uniform() {
        uint64_t u = next_u64();
        double v = (u >> 11) * 0x1.0p-53;
        return v > 0.0 ? v : 0x1.0p-53;
    }

    double next_exponential(double rate) { return -std::log(next_uniform()) / rate; }

    double next_normal();

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    double normal_tail(double sign);

    uint64_t s_[4];
};

}  // namespace passage
