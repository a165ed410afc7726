#pragma once
// Deterministic pseudo-random source for simulation runs.
//
// Engine: xoshiro256** (Blackman & Vigna), seeded through SplitMix64 so that
// any 64-bit seed -- including 0 -- expands to a full, valid generator state.
// The sequence is a pure function of the seed and the algorithm, not of the
// platform: equal seeds give identical draws on every machine and compiler.
//
// Two primitives cover everything the simulation consumes:
//   uniform_int(n)  -- integer in [1, n], rejection-sampled (no modulo bias)
//   uniform_unit()  -- double in [0, 1) with 53-bit resolution
//
// step_count() reports how many raw engine outputs have been consumed, so
// tests can audit the exact draw usage of an operation. uniform_unit always
// consumes one step; uniform_int consumes one except when a raw draw lands in
// the rejection zone (fewer than n values out of 2^64, so in practice one).

#include <array>
#include <cstdint>
#include <stdexcept>

namespace ecosim {

namespace detail {

// SplitMix64, used only to expand the user seed into engine state.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

} // namespace detail

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        detail::SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    // One raw engine step: xoshiro256**.
    std::uint64_t next_u64() {
        ++steps_;
        const std::uint64_t result = rotl(state_[1] * 5ULL, 7) * 9ULL;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [1, n]. Rejection sampling keeps every value at
    // exactly 1/n; the rejection zone holds fewer than n of the 2^64 raw
    // values, so a redraw is astronomically rare.
    int uniform_int(int n) {
        if (n < 1) throw std::invalid_argument("uniform_int: n must be >= 1");
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t reject_below = (0 - bound) % bound; // 2^64 mod n
        std::uint64_t raw = next_u64();
        while (raw < reject_below) raw = next_u64();
        return static_cast<int>(raw % bound) + 1;
    }

    // Uniform double in [0, 1).
    double uniform_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    std::uint64_t step_count() const { return steps_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t steps_ = 0;
};

} // namespace ecosim
