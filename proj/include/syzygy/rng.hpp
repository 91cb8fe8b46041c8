#pragma once
/**
 * @file rng.hpp
 * @brief Deterministic seeded randomness shared by every randomized routine.
 *
 * All randomized constructions (coordinate changes, random forms, point
 * coordinates) draw through this wrapper so that a seed determines the
 * output bytes across platforms.  std::uniform_int_distribution is avoided
 * on purpose: its output is implementation-defined.
 */

#include <cstdint>
#include <random>

namespace syzygy {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable sub-seed derivation, used to hand independent streams to trials.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(base ^ 0x5851f42d4c957f2dULL) + splitmix64(a) * 3 + b);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish value in [0, n); the modulo bias is irrelevant here and
    /// the result is reproducible, which is what matters.
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

private:
    std::mt19937_64 gen_;
};

} // namespace syzygy
