#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iet/error.hpp"
#include "iet/integer_matrix.hpp"
#include "iet/interval_exchange.hpp"

namespace iet {

// Ordered multiplicity matrices M_1, M_2, ... with the convention
// λ_{k-1} ∝ M_k λ_k (old lengths = M · new lengths, column vectors).
struct MatrixSequence {
    std::vector<IntegerMatrix> matrices;
    // Rauzy move per entry ("a" top, "b" bottom); telescoped entries concatenate.
    std::vector<std::string> tags;

    std::size_t size() const noexcept { return matrices.size(); }
    bool empty() const noexcept { return matrices.empty(); }
    std::size_t dimension() const noexcept { return matrices.empty() ? 0 : matrices.front().rows(); }
    void push_back(IntegerMatrix m, std::string tag) {
        matrices.push_back(std::move(m));
        tags.push_back(std::move(tag));
    }
};

template <Scalar S>
struct RauzyStep {
    IntervalExchange<S> induced;
    IntegerMatrix matrix;
    char tag;
};

// One Rauzy–Veech step: first return to [0, 1 − min(λ_n, λ_{π^{-1}(n)})),
// lengths renormalized to sum 1. The returned matrix is the elementary
// I + E in label coordinates composed with the relabeling that restores
// domain order; it is I + E exactly whenever the domain order is unchanged.
//
// Throws FlipUnsupported, Reducible, KeaneViolation (equal rightmost lengths),
// InvalidArgument (n < 2).
template <Scalar S>
RauzyStep<S> rauzy_step(const IntervalExchange<S>& spec);

struct InductionFailure {
    ErrorKind kind;
    std::size_t step;  // 0-based index of the step that failed
    std::string message;
};

template <Scalar S>
struct InductionRun {
    MatrixSequence sequence;
    IntervalExchange<S> last;  // spec after the final successful step
    std::optional<InductionFailure> failure;
};

// Runs up to `steps` Rauzy steps. A failing step stops the run and is
// reported in `failure`; the matrices produced before it are kept.
template <Scalar S>
InductionRun<S> induce(const IntervalExchange<S>& spec, std::size_t steps);

// Products over the blocks [0,c_1), [c_1,c_2), ..., [c_k, len). Cut points
// must be strictly increasing and lie in (0, len); otherwise BadCutPoints.
MatrixSequence telescope(const MatrixSequence& seq, std::span<const std::size_t> cut_points);

// Ordered 0/1 factors whose product is m. Square n×n factors are split off
// with unimodular row/column subtractions; if those stall, the remainder is
// written as an n×k and a k×n 0/1 factor through extra vertices, one per
// unit of multiplicity above 1. Throws ZeroLine.
std::vector<IntegerMatrix> zero_one_factorization(const IntegerMatrix& m);

struct BratteliDiagram {
    std::vector<std::size_t> level_sizes;
    // incidences[k](i, j) = 1 iff vertex i of level k is joined to vertex j of level k+1
    std::vector<IntegerMatrix> incidences;
    // [first, last) range in `incidences` produced by each input matrix
    std::vector<std::pair<std::size_t, std::size_t>> blocks;

    std::string to_dot() const;
};

BratteliDiagram to_bratteli(const MatrixSequence& seq);

struct StationarityWitness {
    std::size_t start = 0;
    std::size_t block_length = 0;
    IntegerMatrix block_product;
    std::size_t repetitions_verified = 0;
};

inline constexpr std::size_t kDefaultMaxBlock = 12;
inline constexpr std::size_t kDefaultMinRepeats = 3;

// Smallest block length L ≤ max_block (then earliest start) such that the
// tail of the sequence splits into at least min_repeats consecutive blocks of
// length L with identical products. Throws SequenceTooShort when the
// sequence has fewer than max_block·min_repeats entries.
std::optional<StationarityWitness> detect_stationarity(const MatrixSequence& seq,
                                                       std::size_t max_block = kDefaultMaxBlock,
                                                       std::size_t min_repeats = kDefaultMinRepeats);

// Some product of at most `window` consecutive matrices is strictly positive.
bool simplicity_check(const MatrixSequence& seq, std::size_t window);

}  // namespace iet
