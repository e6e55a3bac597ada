// rng.hpp - deterministic random streams for reproducible Monte Carlo runs
//
// The generator is xoshiro256++ seeded through splitmix64. Both algorithms
// are fully specified here (no dependence on libstdc++ distribution
// internals), so a run is reproducible bit-for-bit across platforms and
// worker counts. The output sequence is locked by a regression test.

#pragma once

#include "a2fdm/types.hpp"
#include <cstdint>

namespace a2fdm {

// splitmix64 finalizer; also used as the seed-mixing hash.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t st = seed;
        for (auto& w : s_) {
            st += 0x9E3779B97F4A7C15ULL;
            w = mix64(st);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound)
    std::uint64_t uniform_int(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // circularly-symmetric complex Gaussian with E|z|^2 = variance (Box-Muller)
    Cx cgauss(double variance = 1.0) {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-variance * std::log(u1));
        return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
    }

    // real N(0, 1)
    double gauss() { return cgauss(2.0).real(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace a2fdm
