#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iet/interval_exchange.hpp"

namespace iet {

// (1/N)·#{0 ≤ t < N : φ^t(x0) ∈ [lo,hi)}. Throws DomainError unless
// 0 ≤ lo ≤ hi ≤ 1 and x0 ∈ [0,1); InvalidArgument for N = 0.
template <Scalar S>
double birkhoff_average(const IntervalExchange<S>& spec, const S& x0, const S& lo, const S& hi, std::size_t n_iter);

struct EmpiricalMeasure {
    std::vector<double> bin_edges;     // uniform grid merged with β_1..β_{n-1}
    std::vector<std::size_t> counts;   // orbit points per bin
    std::vector<double> masses;        // counts / N
    std::string x0;
    double x0_value = 0.0;
    std::size_t iterations = 0;
};

// Histogram of x0, φ(x0), ..., φ^{N−1}(x0) over the refinement of the
// uniform partition into `bins` cells by the interval breakpoints. Bin
// membership is decided in the scalar type of the spec. Throws
// InvalidArgument if bins < n or N = 0, DomainError if x0 ∉ [0,1).
template <Scalar S>
EmpiricalMeasure empirical_measure(const IntervalExchange<S>& spec, const S& x0, std::size_t n_iter, std::size_t bins);

// Σ|m_i − m'_i| over a shared partition.
double l1_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

inline constexpr double kDefaultClusterTolerance = 0.05;
inline constexpr std::size_t kDefaultBins = 64;

struct MeasureCluster {
    EmpiricalMeasure representative;  // member with the smallest start
    std::size_t members = 0;
};

struct MeasureCensus {
    std::vector<MeasureCluster> clusters;
    std::size_t estimated_count = 0;
    std::size_t bound = 0;
    bool bound_respected = false;
    // Two starts with disjoint histogram supports: the dynamics is not
    // minimal and the bound is reported for information only.
    bool non_minimal = false;
    // Histogram of every start in sorted order, and its cluster index.
    std::vector<EmpiricalMeasure> per_start;
    std::vector<std::size_t> assignment;
};

// Empirical measure per start (starts sorted first), single-linkage
// clustering at L1 distance ≤ cluster_tol, comparison with
// measure_bounds(n, has_flips). Throws InvalidArgument for fewer than two
// starts.
template <Scalar S>
MeasureCensus estimate_ergodic_count(const IntervalExchange<S>& spec, std::vector<S> starts, std::size_t n_iter,
                                     double cluster_tol = kDefaultClusterTolerance, std::size_t bins = kDefaultBins);

}  // namespace iet
