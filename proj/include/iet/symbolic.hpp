#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "iet/interval_exchange.hpp"

namespace iet {

// Finite prefix of an infinite symbol sequence over {1..alphabet}.
struct Ray {
    std::size_t alphabet = 0;
    std::vector<int> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
};

// Itinerary of x0, φ(x0), ..., φ^steps(x0) through the partition v_1..v_n.
template <Scalar S>
Ray code_orbit(const IntervalExchange<S>& spec, const S& x0, std::size_t steps);

// Replayable source that keeps extending one itinerary. Single writer:
// extend() mutates the coder's state and appends to the given ray.
template <Scalar S>
class OrbitCoder {
public:
    OrbitCoder(IntervalExchange<S> spec, S x0) : spec_(std::move(spec)), next_(std::move(x0)) {
        spec_.interval_of(next_);
    }

    void extend(Ray& ray, std::size_t count) {
        ray.alphabet = spec_.size();
        ray.symbols.reserve(ray.symbols.size() + count);
        for (std::size_t t = 0; t < count; ++t) {
            ray.symbols.push_back(static_cast<int>(spec_.interval_of(next_)) + 1);
            next_ = spec_(next_);
        }
    }

private:
    IntervalExchange<S> spec_;
    S next_;
};

struct PathDistance {
    double value = 0.0;
    std::size_t common_prefix = 0;
    // Set when the rays agree on every available symbol: 0 is then only a lower bound.
    bool lower_bound = false;
};

// d(x, y) = 2^-k with k the length of the longest common prefix.
PathDistance path_distance(const Ray& x, const Ray& y);

using ForbiddenPairs = std::set<std::pair<int, int>>;

bool is_admissible(std::span<const int> block, const ForbiddenPairs& forbidden);
// All blocks of length n over {1..alphabet} without a forbidden adjacent pair.
std::vector<std::vector<int>> admissible_blocks(std::size_t alphabet, std::size_t length, const ForbiddenPairs& forbidden);

// Number p(N) of distinct length-N factors. Throws PrefixTooShort.
std::size_t block_complexity(const Ray& ray, std::size_t n);

// Shortest initial segment containing every length-N factor seen anywhere in
// the prefix. With an explicit language, every block of the language must
// occur; nullopt if one never does.
std::optional<std::size_t> transitivity_index(const Ray& ray, std::size_t n);
std::optional<std::size_t> transitivity_index(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>& language);

// Shortest window anywhere in the prefix containing every observed (or
// every language) length-N factor.
std::optional<std::size_t> covering_index(const Ray& ray, std::size_t n);
std::optional<std::size_t> covering_index(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>& language);

// φ(N)/θ(N) for N = 1..n_max.
std::vector<double> uniformity_ratio(const Ray& ray, std::size_t n_max);

// φ(N) == p(N)·N on the observed language.
bool uniform_distribution_test(const Ray& ray, std::size_t n);

struct BlockStats {
    std::size_t length = 0;
    std::size_t distinct_blocks = 0;
    std::optional<std::size_t> transitivity;
    std::optional<std::size_t> covering;
};

BlockStats block_stats(const Ray& ray, std::size_t n);

struct SurfaceType {
    std::size_t genus;
    std::size_t boundary_components;
    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

// All (g, m), g ≥ 1, m ≥ 1, with 2g + m − 1 = n and 2 − 2g − m < 0.
std::vector<SurfaceType> surface_parameters(std::size_t n);

extern template class OrbitCoder<double>;
extern template class OrbitCoder<QuadraticNumber>;

}  // namespace iet
