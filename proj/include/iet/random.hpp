#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "iet/interval_exchange.hpp"

namespace iet {

// Seeded source for every random choice in the library. Draws are defined
// directly on the 64-bit engine output so sequences are stable across
// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }
    // Uniform on [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // Uniform on {0..n-1}, n ≥ 1.
    std::size_t below(std::size_t n);

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

// Lengths uniform on the open simplex, a uniformly random irreducible
// permutation, and (with flips) independent fair signs with at least one −1.
FloatExchange random_interval_exchange(Rng& rng, std::size_t n, bool with_flips);

}  // namespace iet
