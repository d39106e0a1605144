#pragma once

#include <cstdint>

namespace redlab {

// splitmix64 (Steele/Lea/Vigna). Pinned here, rather than <random>, so that a
// seed means the same byte-identical output on every platform and in any
// reimplementation of the file formats.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1, via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    bool coin() { return next() & 1; }
};

// Decorrelated child stream; gives each trial its own generator so trials can
// run in any order (or in parallel) without changing what they produce.
inline SplitMix64 child_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    g.next();
    return g;
}

}  // namespace redlab
