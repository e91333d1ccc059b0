#include "iet/permutation.hpp"

#include <algorithm>
#include <string>

#include "iet/error.hpp"

namespace iet {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    inverse_images_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = images_[i];
        if (j >= n || inverse_images_[j] != n)
            fail(ErrorKind::NonBijectivePermutation, "image " + std::to_string(j + 1) + " out of range or repeated");
        inverse_images_[j] = i;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const long> images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (long v : images) {
        if (v < 1 || static_cast<std::size_t>(v) > images.size())
            fail(ErrorKind::NonBijectivePermutation, "image " + std::to_string(v) + " outside 1.." + std::to_string(images.size()));
        zero_based.push_back(static_cast<std::size_t>(v - 1));
    }
    return Permutation(std::move(zero_based));
}

std::vector<long> Permutation::to_one_based() const {
    std::vector<long> out;
    out.reserve(images_.size());
    for (std::size_t v : images_) out.push_back(static_cast<long>(v) + 1);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

bool is_irreducible(const Permutation& pi) {
    // {0..k-1} is invariant iff the largest image among its elements is k-1
    std::size_t max_image = 0;
    for (std::size_t k = 1; k < pi.size(); ++k) {
        max_image = std::max(max_image, pi(k - 1));
        if (max_image == k - 1) return false;
    }
    return true;
}

}  // namespace iet
