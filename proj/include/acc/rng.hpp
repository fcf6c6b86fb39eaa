#pragma once

#include <cstdint>

namespace acc {

// 32-bit linear congruential generator with fixed constants so every
// platform draws the same sequence. All simulation randomness funnels
// through this; nothing touches the C library rand().
struct Lcg {
    std::uint32_t state = 1;

    Lcg() = default;
    explicit Lcg(std::uint32_t seed) : state(seed) {}

    std::uint32_t next() {
        state = state * 1664525u + 1013904223u;
        return state;
    }

    // Uniform-ish value in [0, m) taken from the upper half of the state,
    // which cycles much slower than the low bits.
    std::uint32_t next_range(std::uint32_t m) { return (next() >> 16) % m; }

    // The wander step: an integer in [-2, 2].
    int next_jitter() { return static_cast<int>(next_range(5)) - 2; }
};

} // namespace acc
