#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace iet {

// Bijection of {0..n-1}. Interval i of the domain is sent to target slot
// image(i). Construction from user input goes through from_one_based().
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    // Images given as 1..n, the convention of the JSON spec format.
    static Permutation from_one_based(std::span<const long> images);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    std::size_t preimage(std::size_t j) const { return inverse_images_[j]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::vector<long> to_one_based() const;

    Permutation inverse() const { return Permutation(inverse_images_); }
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
    std::vector<std::size_t> images_;
    std::vector<std::size_t> inverse_images_;
};

// True iff no proper initial segment {0..k-1}, 0 < k < n, is mapped onto itself.
bool is_irreducible(const Permutation& pi);

}  // namespace iet
