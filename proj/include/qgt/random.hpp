#pragma once

#include <cstdint>
#include <random>

namespace qgt {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent child seeds from a master
/// seed and a counter, so trial i always sees the same stream.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace qgt
