#pragma once

#include <cstdint>
#include <random>

namespace evo {

/// All stochastic code draws from a caller-supplied engine so runs are
/// reproducible from a single seed and parallel runs never share state.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the index-th child stream of a root seed. Streams for distinct
/// indices are decorrelated, so runs can execute in any order or in parallel.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root ^ splitmix64(index + 0x51a2b3c4d5e6f708ULL));
}

/// Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift with
/// rejection; unbiased and independent of the standard library's
/// distribution implementations.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform double in [0, 1), 53 random bits.
inline double rand_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]; safe as a log argument.
inline double rand_unit_pos(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Bernoulli draw. p <= 0 and p >= 1 are decided without consuming
/// randomness, so degenerate probabilities leave the stream untouched.
inline bool rand_bool(Rng& rng, double p) {
    if (p <= 0.0) {
        return false;
    }
    if (p >= 1.0) {
        return true;
    }
    return rand_unit(rng) < p;
}

} // namespace evo
