#include "iet/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "iet/dimension_group.hpp"
#include "iet/error.hpp"

namespace iet {

namespace {

template <Scalar S>
void check_start(const IntervalExchange<S>& spec, const S& x0) {
    spec.interval_of(x0);
}

template <Scalar S>
std::vector<S> refined_edges(const IntervalExchange<S>& spec, std::size_t bins) {
    std::vector<S> edges;
    edges.reserve(bins + spec.size() + 1);
    for (std::size_t k = 0; k <= bins; ++k)
        edges.push_back(ScalarTraits<S>::from_rational(Rational(static_cast<long>(k), static_cast<unsigned long>(bins))));
    for (const auto& b : spec.breakpoints()) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

template <Scalar S>
double birkhoff_average(const IntervalExchange<S>& spec, const S& x0, const S& lo, const S& hi, std::size_t n_iter) {
    if (n_iter == 0) fail(ErrorKind::InvalidArgument, "N must be positive");
    if (lo < S(0) || hi > S(1) || hi < lo)
        fail(ErrorKind::DomainError, "target [" + scalar_to_string(lo) + ", " + scalar_to_string(hi) + ") not inside [0,1]");
    check_start(spec, x0);
    std::size_t hits = 0;
    S x = x0;
    for (std::size_t t = 0; t < n_iter; ++t) {
        if (!(x < lo) && x < hi) ++hits;
        if (t + 1 < n_iter) x = spec(x);
    }
    return static_cast<double>(hits) / static_cast<double>(n_iter);
}

template <Scalar S>
EmpiricalMeasure empirical_measure(const IntervalExchange<S>& spec, const S& x0, std::size_t n_iter, std::size_t bins) {
    if (n_iter == 0) fail(ErrorKind::InvalidArgument, "N must be positive");
    if (bins < spec.size()) fail(ErrorKind::InvalidArgument, "need at least as many bins as intervals");
    check_start(spec, x0);

    const std::vector<S> edges = refined_edges(spec, bins);
    EmpiricalMeasure out;
    out.x0 = scalar_to_string(x0);
    out.x0_value = to_double(x0);
    out.iterations = n_iter;
    out.counts.assign(edges.size() - 1, 0);
    out.bin_edges.reserve(edges.size());
    for (const auto& e : edges) out.bin_edges.push_back(to_double(e));

    S x = x0;
    for (std::size_t t = 0; t < n_iter; ++t) {
        auto it = std::upper_bound(edges.begin() + 1, edges.end(), x);
        ++out.counts[static_cast<std::size_t>(it - (edges.begin() + 1))];
        if (t + 1 < n_iter) x = spec(x);
    }
    out.masses.reserve(out.counts.size());
    for (auto c : out.counts) out.masses.push_back(static_cast<double>(c) / static_cast<double>(n_iter));
    return out;
}

double l1_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
    if (a.bin_edges != b.bin_edges) fail(ErrorKind::InvalidArgument, "histograms over different partitions");
    // exact on counts, one rounding per term
    const double na = static_cast<double>(a.iterations);
    const double nb = static_cast<double>(b.iterations);
    double total = 0.0;
    for (std::size_t i = 0; i < a.counts.size(); ++i) {
        if (a.iterations == b.iterations) {
            const double diff = std::abs(static_cast<double>(a.counts[i]) - static_cast<double>(b.counts[i]));
            total += diff / na;
        } else {
            total += std::abs(static_cast<double>(a.counts[i]) / na - static_cast<double>(b.counts[i]) / nb);
        }
    }
    return total;
}

template <Scalar S>
MeasureCensus estimate_ergodic_count(const IntervalExchange<S>& spec, std::vector<S> starts, std::size_t n_iter,
                                     double cluster_tol, std::size_t bins) {
    if (starts.size() < 2) fail(ErrorKind::InvalidArgument, "census needs at least two starting points");
    if (!(cluster_tol >= 0.0)) fail(ErrorKind::InvalidArgument, "cluster tolerance must be nonnegative");
    std::sort(starts.begin(), starts.end());

    std::vector<EmpiricalMeasure> measures;
    measures.reserve(starts.size());
    for (const auto& x0 : starts) measures.push_back(empirical_measure(spec, x0, n_iter, bins));

    const std::size_t m = measures.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    MeasureCensus census;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (l1_distance(measures[i], measures[j]) <= cluster_tol) {
                std::size_t ri = find_root(parent, i);
                std::size_t rj = find_root(parent, j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
            bool overlap = false;
            for (std::size_t b = 0; b < measures[i].counts.size() && !overlap; ++b)
                overlap = measures[i].counts[b] > 0 && measures[j].counts[b] > 0;
            if (!overlap) census.non_minimal = true;
        }
    }

    std::vector<std::size_t> slot(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = find_root(parent, i);
        if (slot[r] == m) {
            slot[r] = census.clusters.size();
            census.clusters.push_back({measures[r], 0});
        }
        ++census.clusters[slot[r]].members;
        census.assignment.push_back(slot[r]);
    }
    census.per_start = std::move(measures);
    census.estimated_count = census.clusters.size();
    census.bound = measure_bounds(spec.size(), spec.has_flips());
    census.bound_respected = census.estimated_count <= census.bound;
    return census;
}

template double birkhoff_average(const IntervalExchange<double>&, const double&, const double&, const double&, std::size_t);
template double birkhoff_average(const IntervalExchange<QuadraticNumber>&, const QuadraticNumber&, const QuadraticNumber&,
                                 const QuadraticNumber&, std::size_t);
template EmpiricalMeasure empirical_measure(const IntervalExchange<double>&, const double&, std::size_t, std::size_t);
template EmpiricalMeasure empirical_measure(const IntervalExchange<QuadraticNumber>&, const QuadraticNumber&, std::size_t,
                                            std::size_t);
template MeasureCensus estimate_ergodic_count(const IntervalExchange<double>&, std::vector<double>, std::size_t, double,
                                              std::size_t);
template MeasureCensus estimate_ergodic_count(const IntervalExchange<QuadraticNumber>&, std::vector<QuadraticNumber>,
                                              std::size_t, double, std::size_t);

}  // namespace iet
