#include "iet/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>

#include "iet/error.hpp"

namespace iet {

namespace {

// Position-wise ids of the length-N factors of a ray; equal factors share an id.
class FactorIndex {
public:
    FactorIndex(const Ray& ray, std::size_t n) : n_(n) {
        if (n == 0) fail(ErrorKind::InvalidArgument, "block length must be positive");
        if (ray.size() < n)
            fail(ErrorKind::PrefixTooShort, "prefix of length " + std::to_string(ray.size()) + " has no factor of length " +
                                                std::to_string(n));
        bytes_ = encode(ray.symbols);
        const std::size_t count = ray.size() - n + 1;
        ids_.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            auto [it, inserted] = lookup_.try_emplace(view(i), lookup_.size());
            ids_.push_back(it->second);
        }
    }

    std::size_t distinct() const noexcept { return lookup_.size(); }
    const std::vector<std::size_t>& ids() const noexcept { return ids_; }
    std::size_t length() const noexcept { return n_; }

    std::optional<std::size_t> id_of(const std::vector<int>& block) const {
        if (block.size() != n_) fail(ErrorKind::InvalidArgument, "language block has the wrong length");
        std::string key = encode(block);
        auto it = lookup_.find(std::string_view(key));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

private:
    static std::string encode(const std::vector<int>& symbols) {
        std::string out;
        out.reserve(symbols.size() * 2);
        for (int s : symbols) {
            if (s < 0 || s > 0xffff) fail(ErrorKind::InvalidArgument, "symbol out of range");
            out.push_back(static_cast<char>(s & 0xff));
            out.push_back(static_cast<char>((s >> 8) & 0xff));
        }
        return out;
    }
    std::string_view view(std::size_t pos) const { return std::string_view(bytes_).substr(pos * 2, n_ * 2); }

    std::size_t n_;
    std::string bytes_;
    std::vector<std::size_t> ids_;
    std::unordered_map<std::string_view, std::size_t> lookup_;
};

// Ids that must all be covered; nullopt if some language block is absent.
std::optional<std::vector<bool>> wanted_ids(const FactorIndex& index, const std::vector<std::vector<int>>* language) {
    std::vector<bool> wanted(index.distinct(), language == nullptr);
    if (language == nullptr) return wanted;
    for (const auto& block : *language) {
        auto id = index.id_of(block);
        if (!id) return std::nullopt;
        wanted[*id] = true;
    }
    return wanted;
}

std::optional<std::size_t> transitivity_impl(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>* language) {
    FactorIndex index(ray, n);
    auto wanted = wanted_ids(index, language);
    if (!wanted) return std::nullopt;
    std::vector<bool> seen(index.distinct(), false);
    std::size_t remaining = static_cast<std::size_t>(std::count(wanted->begin(), wanted->end(), true));
    if (remaining == 0) return 0;
    const auto& ids = index.ids();
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        std::size_t id = ids[pos];
        if ((*wanted)[id] && !seen[id]) {
            seen[id] = true;
            if (--remaining == 0) return pos + n;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> covering_impl(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>* language) {
    FactorIndex index(ray, n);
    auto wanted = wanted_ids(index, language);
    if (!wanted) return std::nullopt;
    const std::size_t need = static_cast<std::size_t>(std::count(wanted->begin(), wanted->end(), true));
    if (need == 0) return 0;
    const auto& ids = index.ids();
    std::vector<std::size_t> in_window(index.distinct(), 0);
    std::size_t covered = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t left = 0;
    for (std::size_t right = 0; right < ids.size(); ++right) {
        if ((*wanted)[ids[right]] && in_window[ids[right]]++ == 0) ++covered;
        while (covered == need) {
            best = std::min(best, right - left + n);
            if ((*wanted)[ids[left]] && --in_window[ids[left]] == 0) --covered;
            ++left;
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

}  // namespace

template <Scalar S>
Ray code_orbit(const IntervalExchange<S>& spec, const S& x0, std::size_t steps) {
    Ray ray;
    OrbitCoder<S> coder(spec, x0);
    coder.extend(ray, steps + 1);
    return ray;
}

template Ray code_orbit(const IntervalExchange<double>&, const double&, std::size_t);
template Ray code_orbit(const IntervalExchange<QuadraticNumber>&, const QuadraticNumber&, std::size_t);
template class OrbitCoder<double>;
template class OrbitCoder<QuadraticNumber>;

PathDistance path_distance(const Ray& x, const Ray& y) {
    const std::size_t limit = std::min(x.size(), y.size());
    std::size_t k = 0;
    while (k < limit && x.symbols[k] == y.symbols[k]) ++k;
    if (k == limit) return {0.0, k, true};
    return {std::ldexp(1.0, -static_cast<int>(k)), k, false};
}

bool is_admissible(std::span<const int> block, const ForbiddenPairs& forbidden) {
    for (std::size_t i = 1; i < block.size(); ++i)
        if (forbidden.count({block[i - 1], block[i]})) return false;
    return true;
}

std::vector<std::vector<int>> admissible_blocks(std::size_t alphabet, std::size_t length, const ForbiddenPairs& forbidden) {
    std::vector<std::vector<int>> out;
    if (length == 0 || alphabet == 0) return out;
    std::vector<int> block;
    // depth-first extension keeps only admissible prefixes
    auto extend = [&](auto&& self) -> void {
        if (block.size() == length) {
            out.push_back(block);
            return;
        }
        for (int s = 1; s <= static_cast<int>(alphabet); ++s) {
            if (!block.empty() && forbidden.count({block.back(), s})) continue;
            block.push_back(s);
            self(self);
            block.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::size_t block_complexity(const Ray& ray, std::size_t n) { return FactorIndex(ray, n).distinct(); }

std::optional<std::size_t> transitivity_index(const Ray& ray, std::size_t n) { return transitivity_impl(ray, n, nullptr); }

std::optional<std::size_t> transitivity_index(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>& language) {
    return transitivity_impl(ray, n, &language);
}

std::optional<std::size_t> covering_index(const Ray& ray, std::size_t n) { return covering_impl(ray, n, nullptr); }

std::optional<std::size_t> covering_index(const Ray& ray, std::size_t n, const std::vector<std::vector<int>>& language) {
    return covering_impl(ray, n, &language);
}

std::vector<double> uniformity_ratio(const Ray& ray, std::size_t n_max) {
    std::vector<double> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto phi = transitivity_index(ray, n);
        auto theta = covering_index(ray, n);
        if (phi && theta && *theta > 0) out.push_back(static_cast<double>(*phi) / static_cast<double>(*theta));
    }
    return out;
}

bool uniform_distribution_test(const Ray& ray, std::size_t n) {
    const std::size_t p = block_complexity(ray, n);
    auto phi = transitivity_index(ray, n);
    return phi && *phi == p * n;
}

BlockStats block_stats(const Ray& ray, std::size_t n) {
    return {n, block_complexity(ray, n), transitivity_index(ray, n), covering_index(ray, n)};
}

std::vector<SurfaceType> surface_parameters(std::size_t n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "surface parameters need n >= 2");
    std::vector<SurfaceType> out;
    for (std::size_t g = 1; 2 * g <= n; ++g) {
        const std::size_t m = n + 1 - 2 * g;
        if (m >= 1 && 2 * g + m > 2) out.push_back({g, m});
    }
    return out;
}

}  // namespace iet
