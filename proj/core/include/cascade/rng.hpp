#pragma once

#include <cmath>
#include <cstdint>

namespace cascade {

// Stateless counter-based generator. Every output is a pure function of
// (key, counter), so the forcing at a given (seed, step, draw) can be
// reproduced from anywhere, in any order, on any thread count.
//
// The construction is the functional form of SplitMix64: the n-th output of a
// SplitMix64 stream seeded with `key` equals mix64(key + n * golden_gamma).
namespace counter_rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stream key for one (seed, step) forcing realization.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t step) {
    return mix64(seed + golden_gamma) ^ mix64(step * golden_gamma + 0x8E9D'5AAB'736B'11C5ull);
}

inline std::uint64_t uint_at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + (counter + 1) * golden_gamma);
}

// Uniform in (0, 1]; never returns 0 so log() below is safe.
inline double uniform_at(std::uint64_t key, std::uint64_t counter) {
    return (static_cast<double>(uint_at(key, counter) >> 11) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box-Muller on counters (2*index, 2*index+1).
inline double normal_at(std::uint64_t key, std::uint64_t index) {
    const double u1 = uniform_at(key, 2 * index);
    const double u2 = uniform_at(key, 2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

} // namespace counter_rng
} // namespace cascade
