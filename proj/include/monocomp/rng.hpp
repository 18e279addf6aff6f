#pragma once

#include <cstdint>

namespace monocomp {

/// Seed plus stream id. Identical (seed, stream) pairs reproduce identical
/// draw sequences on every platform; distinct streams are independent.
struct RngSeed {
    std::uint64_t seed{0};
    std::uint64_t stream{0};
};

/**
 * xoshiro256** 1.0, state seeded through SplitMix64.
 *
 * This is the single generator used everywhere in the library. It is defined
 * purely in terms of 64-bit integer operations, so the raw stream is
 * bit-exact across platforms and compilers. Bounded draws use Lemire's
 * multiply-shift rejection; doubles take the top 53 bits.
 */
class Rng {
public:
    explicit Rng(RngSeed s = {}) {
        std::uint64_t x = s.seed ^ (0x9e3779b97f4a7c15ULL * (s.stream + 1));
        for (auto& word : state_) word = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool next_bernoulli(double p) { return next_double() < p; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

}  // namespace monocomp
