#include "iet/dimension_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include <Eigen/Dense>

namespace iet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_square_nonnegative(const IntegerMatrix& p) {
    if (!p.is_square() || p.rows() == 0) fail(ErrorKind::InvalidArgument, "expected a nonempty square matrix");
    if (!p.is_nonnegative()) fail(ErrorKind::InvalidArgument, "matrix has a negative entry");
}

std::vector<double> multiply(const std::vector<double>& p, std::size_t n, std::span<const double> x) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += p[i * n + j] * x[j];
        y[i] = s;
    }
    return y;
}

// Exact L1 distance between the normalized columns a and b of m.
double column_distance(const IntegerMatrix& m, const std::vector<Integer>& sums, std::size_t a, std::size_t b) {
    Integer num = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) num += abs(m(r, a) * sums[b] - m(r, b) * sums[a]);
    return Rational(num, sums[a] * sums[b]).get_d();
}

std::vector<Integer> column_sums(const IntegerMatrix& m) {
    std::vector<Integer> sums(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) sums[c] += m(r, c);
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sums[c] == 0) fail(ErrorKind::ZeroLine, "product has an all-zero column " + std::to_string(c + 1));
    return sums;
}

double exact_diameter(const IntegerMatrix& m) {
    const auto sums = column_sums(m);
    double d = 0.0;
    for (std::size_t a = 0; a < m.cols(); ++a)
        for (std::size_t b = a + 1; b < m.cols(); ++b) d = std::max(d, column_distance(m, sums, a, b));
    return d;
}

IntegerMatrix prefix_product(const MatrixSequence& seq, std::size_t k) {
    if (k > seq.size()) fail(ErrorKind::InvalidArgument, "k exceeds the sequence length");
    const std::size_t n = seq.dimension();
    if (n == 0) fail(ErrorKind::InvalidArgument, "empty matrix sequence");
    IntegerMatrix m = IntegerMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) {
        if (!seq.matrices[i].is_nonnegative()) fail(ErrorKind::InvalidArgument, "matrix " + std::to_string(i + 1) + " has a negative entry");
        m = m * seq.matrices[i];
    }
    return m;
}

std::size_t affine_rank(const std::vector<std::vector<double>>& columns, double tol) {
    const std::size_t n = columns.size();
    const std::size_t dim = columns.front().size();
    Eigen::MatrixXd c(dim, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dim; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = columns[j][i];
    Eigen::VectorXd mean = c.rowwise().mean();
    c.colwise() -= mean;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 1;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    return std::min(rank + 1, n);
}

StateSpaceApprox simplex_of(const IntegerMatrix& m, std::size_t k) {
    const auto sums = column_sums(m);
    StateSpaceApprox out;
    out.k = k;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<double> col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = Rational(m(r, c), sums[c]).get_d();
        out.columns.push_back(std::move(col));
    }
    out.diameter = 0.0;
    for (std::size_t a = 0; a < m.cols(); ++a)
        for (std::size_t b = a + 1; b < m.cols(); ++b) out.diameter = std::max(out.diameter, column_distance(m, sums, a, b));
    out.numeric_rank = out.diameter < kStateDimTolerance ? 1 : affine_rank(out.columns, kStateDimTolerance);
    return out;
}

}  // namespace

double collatz_wielandt(const IntegerMatrix& p, std::span<const double> x) {
    check_square_nonnegative(p);
    const std::size_t n = p.rows();
    if (x.size() != n) fail(ErrorKind::InvalidArgument, "vector length differs from matrix size");
    bool any = false;
    for (double v : x) {
        if (!(v >= 0.0) || !std::isfinite(v)) fail(ErrorKind::InvalidArgument, "vector must be nonnegative and finite");
        any = any || v > 0.0;
    }
    if (!any) fail(ErrorKind::ZeroVector, "Collatz-Wielandt function needs a nonzero vector");
    const auto y = multiply(p.to_double(), n, x);
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) r = std::min(r, y[i] / x[i]);
    return r;
}

PFResult perron_frobenius(const IntegerMatrix& p, double tol, std::size_t max_iter) {
    check_square_nonnegative(p);
    if (!(tol > 0.0)) fail(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (!is_primitive(p)) fail(ErrorKind::NotPrimitive, "matrix " + p.to_string() + " is not primitive");

    const std::size_t n = p.rows();
    const std::vector<double> pd = p.to_double();
    // relative rounding of a length-n nonnegative dot product plus one division
    const double widen = static_cast<double>(n + 2) * kEps;

    PFResult result;
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> y = multiply(pd, n, x);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lo = std::min(lo, y[i] / x[i]);
            hi = std::max(hi, y[i] / x[i]);
        }
        lo *= 1.0 - widen;
        hi *= 1.0 + widen;
        result.brackets.emplace_back(lo, hi);
        if (hi - lo <= tol) {
            result.eigenvalue = 0.5 * (lo + hi);
            result.lower_cw = lo;
            result.upper_cw = hi;
            result.iterations = iter;
            result.eigenvector = x;
            double residual = 0.0;
            for (std::size_t i = 0; i < n; ++i) residual += std::abs(y[i] - result.eigenvalue * x[i]);
            result.residual = residual;
            return result;
        }
        double norm = 0.0;
        for (double v : y) norm += v;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    fail(ErrorKind::MaxIterExceeded, "power iteration did not reach bracket width " + std::to_string(tol) + " in " +
                                         std::to_string(max_iter) + " iterations");
}

StateSpaceApprox state_simplex(const MatrixSequence& seq, std::size_t k) { return simplex_of(prefix_product(seq, k), k); }

std::vector<double> simplex_diameters(const MatrixSequence& seq, std::size_t k_max) {
    IntegerMatrix m = prefix_product(seq, 0);
    std::vector<double> out{exact_diameter(m)};
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (k > seq.size()) fail(ErrorKind::InvalidArgument, "k exceeds the sequence length");
        m = m * seq.matrices[k - 1];
        out.push_back(exact_diameter(m));
    }
    return out;
}

std::size_t estimate_state_dim(const MatrixSequence& seq, std::size_t k_max, double tol) {
    if (seq.empty()) fail(ErrorKind::InvalidArgument, "empty matrix sequence");
    StateSpaceApprox s = state_simplex(seq, k_max);
    if (s.diameter < tol) return 1;
    return affine_rank(s.columns, tol);
}

const char* to_string(ErgodicityVerdict::Status status) noexcept {
    switch (status) {
        case ErgodicityVerdict::Status::StrictlyErgodic: return "StrictlyErgodic";
        case ErgodicityVerdict::Status::LikelyErgodic: return "LikelyErgodic";
        case ErgodicityVerdict::Status::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

ErgodicityVerdict classify_sequence(MatrixSequence seq, std::size_t max_block, double tol, std::size_t min_repeats) {
    ErgodicityVerdict v;
    v.sequence = std::move(seq);
    const MatrixSequence& s = v.sequence;
    if (s.empty()) {
        v.diagnostics.emplace_back("empty multiplicity sequence");
        return v;
    }
    v.diameters = simplex_diameters(s, s.size());
    v.final_diameter = v.diameters.back();
    v.state_dim_estimate = estimate_state_dim(s, s.size(), tol);
    v.simple = simplicity_check(s, s.size());

    if (s.size() >= max_block * min_repeats) {
        v.witness = detect_stationarity(s, max_block, min_repeats);
        if (!v.witness) v.diagnostics.emplace_back("no stationary block of length <= " + std::to_string(max_block));
    } else {
        v.diagnostics.emplace_back("sequence of length " + std::to_string(s.size()) +
                                   " too short for stationarity search");
    }

    if (v.witness) {
        if (is_primitive(v.witness->block_product)) {
            // bracket width relative to the size of the block product
            double scale = 1.0;
            for (std::size_t r = 0; r < v.witness->block_product.rows(); ++r) {
                double row = 0.0;
                for (std::size_t c = 0; c < v.witness->block_product.cols(); ++c) row += v.witness->block_product(r, c).get_d();
                scale = std::max(scale, row);
            }
            v.perron = perron_frobenius(v.witness->block_product, 1e-12 * scale);
            v.status = ErgodicityVerdict::Status::StrictlyErgodic;
            return v;
        }
        v.diagnostics.emplace_back("stationary block product is not primitive");
    }
    if (v.state_dim_estimate == 1 && v.simple) {
        v.status = ErgodicityVerdict::Status::LikelyErgodic;
    } else {
        v.status = ErgodicityVerdict::Status::Inconclusive;
        if (!v.simple) v.diagnostics.emplace_back("no strictly positive window product");
        if (v.state_dim_estimate != 1)
            v.diagnostics.emplace_back("state simplex dimension estimate " + std::to_string(v.state_dim_estimate));
    }
    return v;
}

template <Scalar S>
ErgodicityVerdict strict_ergodicity_verdict(const IntervalExchange<S>& spec, std::size_t induction_depth,
                                            std::size_t max_block, double tol) {
    InductionRun<S> run = induce(spec, induction_depth);
    if (run.failure) {
        ErgodicityVerdict v;
        v.sequence = std::move(run.sequence);
        if (!v.sequence.empty()) {
            v.diameters = simplex_diameters(v.sequence, v.sequence.size());
            v.final_diameter = v.diameters.back();
            v.state_dim_estimate = estimate_state_dim(v.sequence, v.sequence.size(), tol);
        } else {
            v.state_dim_estimate = spec.size();
            v.final_diameter = spec.size() > 1 ? 2.0 : 0.0;
            v.diameters = {v.final_diameter};
        }
        v.status = ErgodicityVerdict::Status::Inconclusive;
        v.diagnostics.push_back(std::string(to_string(run.failure->kind)) + " at induction step " +
                                std::to_string(run.failure->step) + " (" + run.failure->message + ")");
        return v;
    }
    return classify_sequence(std::move(run.sequence), max_block, tol);
}

template ErgodicityVerdict strict_ergodicity_verdict(const IntervalExchange<double>&, std::size_t, std::size_t, double);
template ErgodicityVerdict strict_ergodicity_verdict(const IntervalExchange<QuadraticNumber>&, std::size_t, std::size_t,
                                                     double);

CyclicStructure cyclic_structure(const IntegerMatrix& p) {
    check_square_nonnegative(p);
    const std::size_t n = p.rows();
    std::vector<std::vector<std::size_t>> out(n), in(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p(i, j) != 0) {
                out[i].push_back(j);
                in[j].push_back(i);
            }

    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    auto bfs = [&](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<std::size_t> level(n, unseen);
        std::queue<std::size_t> q;
        level[0] = 0;
        q.push(0);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj[u])
                if (level[v] == unseen) {
                    level[v] = level[u] + 1;
                    q.push(v);
                }
        }
        return level;
    };
    const auto level = bfs(out);
    const auto back = bfs(in);
    bool has_edge = false;
    for (const auto& e : out) has_edge = has_edge || !e.empty();
    for (std::size_t v = 0; v < n; ++v)
        if (level[v] == unseen || back[v] == unseen || !has_edge)
            fail(ErrorKind::NotIrreducible, "matrix " + p.to_string() + " is not irreducible");

    std::size_t period = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : out[u]) {
            long diff = static_cast<long>(level[u]) + 1 - static_cast<long>(level[v]);
            period = std::gcd(period, static_cast<std::size_t>(std::abs(diff)));
        }

    CyclicStructure cs;
    cs.period = period;
    cs.classes.assign(period, {});
    for (std::size_t v = 0; v < n; ++v) cs.classes[level[v] % period].push_back(v);

    const std::vector<double> pd = p.to_double();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pd[i * n + j];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    const auto& ev = solver.eigenvalues();
    double rho = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) rho = std::max(rho, std::abs(ev(i)));
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(std::abs(ev(i)) - rho) <= 1e-8 * std::max(1.0, rho)) cs.peripheral_moduli.push_back(std::abs(ev(i)));
    return cs;
}

std::pair<std::size_t, std::size_t> k_groups(std::size_t n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "K-groups are defined for n >= 2");
    return {n, 1};
}

std::size_t measure_bounds(std::size_t n, bool has_flips) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "measure bounds are defined for n >= 2");
    return has_flips ? n + 2 : n / 2;
}

}  // namespace iet
