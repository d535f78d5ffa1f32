#pragma once

#include <cstdint>

#include "bmem/model.hpp"

namespace bmem {

// splitmix64. Implemented here instead of <random> so that seeded runs are
// bit-identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int next_bipolar() noexcept { return (next() >> 63) == 0 ? 1 : -1; }

    // Uniform value in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

// Mixes a base seed with substream coordinates (e.g. memory count and trial
// index) so every trial gets its own stream independent of scheduling.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    const auto scramble = [](std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return scramble(seed + scramble(a + scramble(b)));
}

inline BipolarVector random_bipolar(SplitMix64& rng, std::size_t n) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = rng.next_bipolar();
    }
    return BipolarVector(std::move(bits));
}

inline MemorySet random_memory_set(SplitMix64& rng, std::size_t count, std::size_t n) {
    std::vector<BipolarVector> memories;
    memories.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        memories.push_back(random_bipolar(rng, n));
    }
    return MemorySet(std::move(memories));
}

}  // namespace bmem
