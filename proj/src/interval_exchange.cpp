#include "iet/interval_exchange.hpp"

#include <algorithm>
#include <cmath>

#include "iet/error.hpp"

namespace iet {

namespace {

template <Scalar S>
void check_length(const S& value, std::size_t i) {
    if constexpr (ScalarTraits<S>::exact) {
        if (value.sign() <= 0)
            fail(ErrorKind::NonPositiveLength, "length " + std::to_string(i + 1) + " = " + value.to_string());
    } else {
        if (!std::isfinite(value)) fail(ErrorKind::InvalidArgument, "length " + std::to_string(i + 1) + " is not finite");
        if (value <= 0.0)
            fail(ErrorKind::NonPositiveLength, "length " + std::to_string(i + 1) + " = " + ScalarTraits<double>::to_string(value));
    }
}

template <Scalar S>
std::vector<S> accumulate(const std::vector<S>& lengths) {
    std::vector<S> out;
    out.reserve(lengths.size() + 1);
    out.push_back(S(0));
    for (const S& l : lengths) out.push_back(out.back() + l);
    // pin the right end so the float partition covers [0,1) exactly
    out.back() = S(1);
    return out;
}

// Largest float strictly below hi.
double below(double hi) { return std::nextafter(hi, -1.0); }

}  // namespace

const char* to_string(KeaneVerdict::Status status) noexcept {
    switch (status) {
        case KeaneVerdict::Status::Holds: return "Holds";
        case KeaneVerdict::Status::FailsAt: return "FailsAt";
        case KeaneVerdict::Status::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

template <Scalar S>
IntervalExchange<S> IntervalExchange<S>::validate(std::vector<S> lengths, Permutation pi, std::vector<int> signs) {
    const std::size_t n = lengths.size();
    if (n == 0) fail(ErrorKind::InvalidArgument, "an interval exchange needs at least one interval");
    if (pi.size() != n) fail(ErrorKind::InvalidArgument, "permutation size differs from number of lengths");
    if (signs.size() != n) fail(ErrorKind::InvalidArgument, "sign vector size differs from number of lengths");
    for (int s : signs)
        if (s != 1 && s != -1) fail(ErrorKind::InvalidArgument, "signs must be +1 or -1");

    S total(0);
    for (std::size_t i = 0; i < n; ++i) {
        check_length(lengths[i], i);
        total += lengths[i];
    }
    if constexpr (ScalarTraits<S>::exact) {
        if (total != S(1)) fail(ErrorKind::LengthSumError, "lengths sum to " + total.to_string());
    } else {
        if (std::abs(total - 1.0) > kFloatLengthTolerance)
            fail(ErrorKind::LengthSumError, "lengths sum to " + ScalarTraits<double>::to_string(total));
    }

    IntervalExchange spec;
    spec.lengths_ = std::move(lengths);
    spec.pi_ = std::move(pi);
    spec.signs_ = std::move(signs);
    spec.beta_ = accumulate(spec.lengths_);
    spec.beta_pi_ = accumulate(spec.target_lengths());
    if constexpr (ScalarTraits<S>::exact) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = spec.pi_(i);
            spec.offset_.push_back(spec.signs_[i] > 0 ? spec.beta_pi_[j] - spec.beta_[i]
                                                      : spec.beta_pi_[j + 1] + spec.beta_[i]);
        }
    }
    return spec;
}

template <Scalar S>
std::vector<S> IntervalExchange<S>::target_lengths() const {
    std::vector<S> out;
    out.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) out.push_back(lengths_[pi_.preimage(j)]);
    return out;
}

template <Scalar S>
bool IntervalExchange<S>::has_flips() const {
    return std::any_of(signs_.begin(), signs_.end(), [](int s) { return s < 0; });
}

template <Scalar S>
std::size_t IntervalExchange<S>::interval_of(const S& x) const {
    if (x < beta_.front() || !(x < beta_.back())) fail(ErrorKind::DomainError, "point " + scalar_to_string(x) + " outside [0,1)");
    auto it = std::upper_bound(beta_.begin() + 1, beta_.end(), x);
    return static_cast<std::size_t>(it - (beta_.begin() + 1));
}

template <Scalar S>
S IntervalExchange<S>::operator()(const S& x) const {
    const std::size_t i = interval_of(x);
    const std::size_t j = pi_(i);
    const S& lo = beta_pi_[j];
    const S& hi = beta_pi_[j + 1];
    if constexpr (ScalarTraits<S>::exact) {
        if (signs_[i] > 0) return x + offset_[i];
        return x == beta_[i] ? lo : offset_[i] - x;
    }
    S y;
    if (signs_[i] > 0) {
        y = x - beta_[i] + lo;
    } else if (x == beta_[i]) {
        y = lo;
    } else {
        y = hi - (x - beta_[i]);
    }
    if constexpr (!ScalarTraits<S>::exact) {
        // keep rounding from pushing the image out of its half-open target slot
        if (!(y < hi)) y = below(hi);
        if (y < lo) y = lo;
    }
    return y;
}

template <Scalar S>
IntervalExchange<S> inverse(const IntervalExchange<S>& spec) {
    const Permutation& pi = spec.permutation();
    std::vector<int> signs;
    signs.reserve(spec.size());
    for (std::size_t j = 0; j < spec.size(); ++j) signs.push_back(spec.signs()[pi.preimage(j)]);
    return IntervalExchange<S>::validate(spec.target_lengths(), pi.inverse(), std::move(signs));
}

template <Scalar S>
Orbit<S> orbit(const IntervalExchange<S>& spec, const S& x0, std::size_t steps) {
    Orbit<S> out;
    out.start = x0;
    out.points.reserve(steps + 1);
    out.interval_indices.reserve(steps + 1);
    S x = x0;
    for (std::size_t t = 0;; ++t) {
        out.interval_indices.push_back(spec.interval_of(x) + 1);
        out.points.push_back(x);
        if (t == steps) break;
        x = spec(x);
    }
    return out;
}

template <Scalar S>
KeaneVerdict keane_condition(const IntervalExchange<S>& spec, std::size_t depth) {
    KeaneVerdict verdict;
    const std::size_t n = spec.size();
    const auto& beta = spec.breakpoints();

    if (!is_irreducible(spec.permutation())) {
        // some β_k is the boundary of an invariant block and never moves
        verdict.status = KeaneVerdict::Status::FailsAt;
        verdict.step = 0;
        for (std::size_t k = 1; k < n; ++k) {
            bool invariant = true;
            for (std::size_t i = 0; i < k; ++i) invariant = invariant && spec.permutation()(i) < k;
            if (invariant) verdict.collisions.push_back({k, k, 0, scalar_to_string(beta[k]), 0.0});
        }
        return verdict;
    }

    std::vector<S> points(beta.begin() + 1, beta.end() - 1);
    const std::vector<S> targets = points;
    for (std::size_t step = 1; step <= depth && !points.empty(); ++step) {
        for (std::size_t s = 0; s < points.size(); ++s) {
            points[s] = spec(points[s]);
            const S& x = points[s];
            auto it = std::lower_bound(targets.begin(), targets.end(), x);
            if constexpr (ScalarTraits<S>::exact) {
                if (it != targets.end() && *it == x)
                    verdict.collisions.push_back(
                        {s + 1, static_cast<std::size_t>(it - targets.begin()) + 1, step, x.to_string(), 0.0});
            } else {
                for (auto cand : {it, it == targets.begin() ? targets.end() : it - 1}) {
                    if (cand == targets.end()) continue;
                    double gap = std::abs(*cand - x);
                    if (gap < kKeaneFloatTolerance)
                        verdict.collisions.push_back({s + 1, static_cast<std::size_t>(cand - targets.begin()) + 1, step,
                                                      ScalarTraits<double>::to_string(x), gap});
                }
            }
        }
        if (!verdict.collisions.empty()) {
            verdict.step = step;
            bool exact_hit = std::all_of(verdict.collisions.begin(), verdict.collisions.end(),
                                         [](const DiscontinuityCollision& c) { return c.gap == 0.0; });
            verdict.status = exact_hit ? KeaneVerdict::Status::FailsAt : KeaneVerdict::Status::Inconclusive;
            return verdict;
        }
    }
    verdict.status = KeaneVerdict::Status::Holds;
    verdict.step = depth;
    return verdict;
}

template class IntervalExchange<double>;
template class IntervalExchange<QuadraticNumber>;

template IntervalExchange<double> inverse(const IntervalExchange<double>&);
template IntervalExchange<QuadraticNumber> inverse(const IntervalExchange<QuadraticNumber>&);
template Orbit<double> orbit(const IntervalExchange<double>&, const double&, std::size_t);
template Orbit<QuadraticNumber> orbit(const IntervalExchange<QuadraticNumber>&, const QuadraticNumber&, std::size_t);
template KeaneVerdict keane_condition(const IntervalExchange<double>&, std::size_t);
template KeaneVerdict keane_condition(const IntervalExchange<QuadraticNumber>&, std::size_t);

}  // namespace iet
