#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet {

// |Σλ − 1| allowed in float mode.
inline constexpr double kFloatLengthTolerance = 1e-12;
// Distance below which two float orbit points are treated as colliding.
inline constexpr double kKeaneFloatTolerance = 1e-10;

// Interval exchange transformation of [0,1) with optional flips.
//
// Interval v_i = [β_i, β_{i+1}) (0-based) is moved isometrically onto the
// target slot [β^π_{π(i)}, β^π_{π(i)+1}), where β^π accumulates the lengths
// in target order. Sign −1 reverses orientation. A flipped interval sends its
// left endpoint to the left end of its target, so every target slot is hit
// exactly once and the map is a bijection of [0,1).
template <Scalar S>
class IntervalExchange {
public:
    // Throws NonPositiveLength, LengthSumError, NonBijectivePermutation or
    // InvalidArgument (size mismatch, bad sign, non-finite float).
    static IntervalExchange validate(std::vector<S> lengths, Permutation pi, std::vector<int> signs);
    static IntervalExchange validate(std::vector<S> lengths, Permutation pi) {
        std::vector<int> signs(lengths.size(), 1);
        return validate(std::move(lengths), std::move(pi), std::move(signs));
    }

    std::size_t size() const noexcept { return lengths_.size(); }
    const std::vector<S>& lengths() const noexcept { return lengths_; }
    const Permutation& permutation() const noexcept { return pi_; }
    const std::vector<int>& signs() const noexcept { return signs_; }
    // β_0..β_n
    const std::vector<S>& breakpoints() const noexcept { return beta_; }
    // β^π_0..β^π_n
    const std::vector<S>& target_breakpoints() const noexcept { return beta_pi_; }
    // Lengths in target order, λ^π_j = λ_{π^{-1}(j)}.
    std::vector<S> target_lengths() const;
    bool has_flips() const;

    // Index i (0-based) with x ∈ v_i. Throws DomainError outside [0,1).
    std::size_t interval_of(const S& x) const;
    S operator()(const S& x) const;

private:
    IntervalExchange() = default;

    std::vector<S> lengths_;
    Permutation pi_;
    std::vector<int> signs_;
    std::vector<S> beta_;
    std::vector<S> beta_pi_;
    // exact mode: x ↦ x + offset_i on oriented intervals, x ↦ offset_i − x on flipped ones
    std::vector<S> offset_;
};

template <Scalar S>
S evaluate(const IntervalExchange<S>& spec, const S& x) {
    return spec(x);
}

// The map whose composition with spec is the identity on all of [0,1).
template <Scalar S>
IntervalExchange<S> inverse(const IntervalExchange<S>& spec);

template <Scalar S>
struct Orbit {
    S start;
    std::vector<S> points;
    // 1-based interval index of each point.
    std::vector<std::size_t> interval_indices;
};

template <Scalar S>
Orbit<S> orbit(const IntervalExchange<S>& spec, const S& x0, std::size_t steps);

struct DiscontinuityCollision {
    std::size_t source = 0;  // 1-based index of the discontinuity whose orbit collides
    std::size_t target = 0;  // 1-based index of the discontinuity that is hit
    std::size_t step = 0;
    std::string point;       // collision point in the spec's number format
    double gap = 0.0;        // |φ^step(β_source) − β_target|, 0 in exact mode
};

struct KeaneVerdict {
    enum class Status { Holds, FailsAt, Inconclusive };
    Status status = Status::Holds;
    // Holds: verified depth; FailsAt/Inconclusive: first offending step.
    std::size_t step = 0;
    std::vector<DiscontinuityCollision> collisions;
};

const char* to_string(KeaneVerdict::Status status) noexcept;

// Finite-depth check that the forward orbits of β_1..β_{n-1} never meet a
// discontinuity. A reducible permutation fails at step 0. Float specs report
// near-misses within kKeaneFloatTolerance as Inconclusive.
template <Scalar S>
KeaneVerdict keane_condition(const IntervalExchange<S>& spec, std::size_t depth);

using ExactExchange = IntervalExchange<QuadraticNumber>;
using FloatExchange = IntervalExchange<double>;

extern template class IntervalExchange<double>;
extern template class IntervalExchange<QuadraticNumber>;

}  // namespace iet
