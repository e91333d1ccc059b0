#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iet/induction.hpp"
#include "iet/integer_matrix.hpp"
#include "iet/interval_exchange.hpp"

namespace iet {

// min over i with x_i > 0 of (Px)_i / x_i. Throws ZeroVector if x == 0 and
// InvalidArgument for negative or mis-sized x.
double collatz_wielandt(const IntegerMatrix& p, std::span<const double> x);

struct PFResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;  // strictly positive, L1-normalized
    double lower_cw = 0.0;
    double upper_cw = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;  // ‖Px − λx‖₁
    // Collatz–Wielandt bracket (min ratio, max ratio) of every iterate.
    std::vector<std::pair<double, double>> brackets;
};

// Power iteration from the all-ones vector with L1 renormalization. Each
// bracket is widened by the worst-case rounding of a nonnegative dot
// product, so it encloses the Perron root in floating point as well.
// Stops when upper − lower ≤ tol. Throws NotPrimitive, MaxIterExceeded.
PFResult perron_frobenius(const IntegerMatrix& p, double tol = 1e-12, std::size_t max_iter = 100000);

// Δ_k: columns of M_1⋯M_k, each scaled to unit L1 norm. Δ_0 is the
// standard simplex.
struct StateSpaceApprox {
    std::size_t k = 0;
    std::vector<std::vector<double>> columns;
    double diameter = 0.0;  // max pairwise L1 distance, computed exactly then rounded
    std::size_t numeric_rank = 0;
};

inline constexpr double kStateDimTolerance = 1e-8;

StateSpaceApprox state_simplex(const MatrixSequence& seq, std::size_t k);
// Diameters of Δ_0..Δ_kmax.
std::vector<double> simplex_diameters(const MatrixSequence& seq, std::size_t k_max);

// Affine rank of Δ_kmax: singular values of the centered column matrix above
// tol·σ_max, plus one, capped at n. Returns 1 once the diameter is below tol.
std::size_t estimate_state_dim(const MatrixSequence& seq, std::size_t k_max, double tol = kStateDimTolerance);

struct ErgodicityVerdict {
    enum class Status { StrictlyErgodic, LikelyErgodic, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<StationarityWitness> witness;
    std::optional<PFResult> perron;
    std::vector<double> diameters;  // Δ_0..Δ_K
    double final_diameter = 0.0;
    std::size_t state_dim_estimate = 0;
    bool simple = false;
    MatrixSequence sequence;
    std::vector<std::string> diagnostics;
};

const char* to_string(ErgodicityVerdict::Status status) noexcept;

// Decision rule on a finished sequence: a stationary tail with primitive
// block product is StrictlyErgodic; otherwise a primitive-windowed sequence
// whose simplex has collapsed to one point is LikelyErgodic; anything else
// is Inconclusive.
ErgodicityVerdict classify_sequence(MatrixSequence seq, std::size_t max_block = kDefaultMaxBlock,
                                    double tol = kStateDimTolerance, std::size_t min_repeats = kDefaultMinRepeats);

// induce → classify_sequence. A halted induction is always Inconclusive.
template <Scalar S>
ErgodicityVerdict strict_ergodicity_verdict(const IntervalExchange<S>& spec, std::size_t induction_depth,
                                            std::size_t max_block = kDefaultMaxBlock, double tol = kStateDimTolerance);

struct CyclicStructure {
    std::size_t period = 1;
    // classes[c] are the vertices (0-based) of the c-th cyclic class; edges run class c -> c+1 mod period
    std::vector<std::vector<std::size_t>> classes;
    std::vector<double> peripheral_moduli;
};

// Throws NotIrreducible unless the digraph of p is strongly connected.
CyclicStructure cyclic_structure(const IntegerMatrix& p);

// Free ranks (K0, K1) = (n, 1). Throws InvalidArgument for n < 2.
std::pair<std::size_t, std::size_t> k_groups(std::size_t n);

// Upper bound on the number of ergodic invariant measures: n + 2 with flips,
// floor(n/2) without. Throws InvalidArgument for n < 2.
std::size_t measure_bounds(std::size_t n, bool has_flips);

}  // namespace iet
