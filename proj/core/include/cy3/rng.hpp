#pragma once

#include <cstdint>
#include <random>

namespace cy3 {

/// Seeded mt19937_64 with plain modulo draws: the raw engine output is fixed
/// by the standard, so sampled checks reproduce bit-for-bit across platforms
/// (std::uniform_int_distribution would not).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    int below(int n) { return (int)(gen() % (uint64_t)n); }
};

inline constexpr uint64_t kDefaultSeed = 20230309;

}  // namespace cy3
