#include "iet/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "iet/error.hpp"

namespace iet {

std::size_t Rng::below(std::size_t n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % range);
}

FloatExchange random_interval_exchange(Rng& rng, std::size_t n, bool with_flips) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "random exchange needs n >= 2");

    // normalized exponential spacings are uniform on the simplex
    std::vector<double> lengths(n);
    for (;;) {
        double total = 0.0;
        for (auto& l : lengths) {
            l = -std::log1p(-rng.uniform());
            total += l;
        }
        bool positive = true;
        for (auto& l : lengths) {
            l /= total;
            positive = positive && l > 1e-9;
        }
        if (positive) break;
    }

    std::vector<std::size_t> images(n);
    Permutation pi;
    do {
        std::iota(images.begin(), images.end(), std::size_t{0});
        for (std::size_t i = n - 1; i > 0; --i) std::swap(images[i], images[rng.below(i + 1)]);
        pi = Permutation(images);
    } while (!is_irreducible(pi));

    std::vector<int> signs(n, 1);
    if (with_flips) {
        do {
            for (auto& s : signs) s = (rng.next() >> 63) ? -1 : 1;
        } while (std::count(signs.begin(), signs.end(), -1) == 0);
    }
    return FloatExchange::validate(std::move(lengths), std::move(pi), std::move(signs));
}

}  // namespace iet
