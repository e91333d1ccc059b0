#include "helpers.hpp"

#include <cmath>
#include <random>

#include "iet/dimension_group.hpp"

using namespace iet;
using namespace iet::test;

namespace {

MatrixSequence constant_sequence(const IntegerMatrix& m, std::size_t len) {
    MatrixSequence seq;
    for (std::size_t i = 0; i < len; ++i) seq.push_back(m, "");
    return seq;
}

// Largest root of x² − (a+d)x + (ad − bc) in extended precision.
long double dominant_root(long a, long b, long c, long d) {
    const long double disc = static_cast<long double>((a - d) * (a - d) + 4 * b * c);
    return (static_cast<long double>(a + d) + std::sqrt(disc)) / 2.0L;
}

// Exact L1 diameter of the normalized columns of M_1⋯M_k.
Rational exact_diameter(const MatrixSequence& seq, std::size_t k) {
    const std::size_t n = seq.dimension();
    IntegerMatrix p = IntegerMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i) p = p * seq.matrices[i];
    std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(n));
    for (std::size_t c = 0; c < n; ++c) {
        Integer sum = 0;
        for (std::size_t r = 0; r < n; ++r) sum += p(r, c);
        for (std::size_t r = 0; r < n; ++r) {
            cols[c][r] = Rational(p(r, c), sum);
            cols[c][r].canonicalize();
        }
    }
    Rational best = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational d = 0;
            for (std::size_t r = 0; r < n; ++r) d += abs(cols[i][r] - cols[j][r]);
            if (d > best) best = d;
        }
    return best;
}

// Reachability closure: strongly connected iff every vertex reaches every other.
bool strongly_connected_oracle(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = m(i, j) != 0 || i == j;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

}  // namespace

TEST_CASE("collatz-wielandt function") {
    const std::vector<double> ones{1.0, 1.0};
    CHECK(collatz_wielandt(IntegerMatrix{{2, 1}, {1, 1}}, ones) == 2.0);
    const std::vector<double> x{0.2, 0.5, 0.3};
    CHECK(collatz_wielandt(IntegerMatrix::identity(3), x) == 1.0);
    const std::vector<double> e1{1.0, 0.0};
    CHECK(collatz_wielandt(IntegerMatrix{{1, 1}, {1, 0}}, e1) == 1.0);
    const std::vector<double> zero{0.0, 0.0};
    CHECK_ERROR_KIND(collatz_wielandt(IntegerMatrix{{1, 1}, {1, 0}}, zero), ErrorKind::ZeroVector);
}

TEST_CASE("perron-frobenius examples") {
    auto pf = perron_frobenius(IntegerMatrix{{2, 1}, {1, 1}});
    const double root = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(pf.eigenvalue - root) <= 1e-12);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(pf.eigenvector[0] / pf.eigenvector[1] == doctest::Approx(phi).epsilon(1e-11));
    CHECK(pf.eigenvector[0] + pf.eigenvector[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pf.lower_cw <= pf.eigenvalue);
    CHECK(pf.eigenvalue <= pf.upper_cw);
    CHECK(pf.upper_cw - pf.lower_cw <= 1e-12);

    auto fib = perron_frobenius(IntegerMatrix{{1, 1}, {1, 0}});
    CHECK(std::abs(fib.eigenvalue - phi) <= 1e-12);

    CHECK_ERROR_KIND(perron_frobenius(IntegerMatrix{{2, 0}, {0, 2}}), ErrorKind::NotPrimitive);
    CHECK_ERROR_KIND(perron_frobenius(IntegerMatrix{{2, 1}, {1, 1}}, 1e-12, 2), ErrorKind::MaxIterExceeded);
}

TEST_CASE("perron-frobenius matches the closed form on every primitive 2x2 matrix with entries 0..5") {
    std::size_t tested = 0;
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c)
                for (long d = 0; d <= 5; ++d) {
                    IntegerMatrix m{{a, b}, {c, d}};
                    if (!is_primitive(m)) continue;
                    ++tested;
                    const long double exact = dominant_root(a, b, c, d);
                    const auto pf = perron_frobenius(m);
                    CHECK(std::fabs(static_cast<long double>(pf.eigenvalue) - exact) <= 1e-12L);
                    for (const auto& [lo, hi] : pf.brackets) {
                        CHECK(static_cast<long double>(lo) <= exact);
                        CHECK(exact <= static_cast<long double>(hi));
                    }
                    for (double v : pf.eigenvector) CHECK(v > 0.0);
                }
    CHECK(tested > 800);
}

TEST_CASE("the perron vector is a fixed direction") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 3;
        IntegerMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(1 + gen() % 6);
        const auto pf = perron_frobenius(m);
        std::vector<double> image(n, 0.0);
        double norm_v = 0.0, norm_i = 0.0, dot = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) image[r] += m(r, c).get_d() * pf.eigenvector[c];
        for (std::size_t r = 0; r < n; ++r) {
            norm_v += pf.eigenvector[r] * pf.eigenvector[r];
            norm_i += image[r] * image[r];
        }
        // angle via the chord between unit vectors, accurate near zero
        double chord = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double diff = pf.eigenvector[r] / std::sqrt(norm_v) - image[r] / std::sqrt(norm_i);
            chord += diff * diff;
            dot += pf.eigenvector[r] * image[r];
        }
        CHECK(std::sqrt(chord) < 1e-12);
        CHECK(dot > 0.0);
    }
}

TEST_CASE("state simplex") {
    const IntegerMatrix p{{2, 1}, {1, 1}};
    const auto seq = constant_sequence(p, 40);
    SUBCASE("delta zero is the standard simplex") {
        auto s0 = state_simplex(seq, 0);
        CHECK(s0.diameter == 2.0);
        CHECK(s0.columns == std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0}});
    }
    SUBCASE("first step") {
        auto s1 = state_simplex(seq, 1);
        CHECK(s1.diameter == 1.0 / 3.0);
        CHECK(s1.columns[0][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(s1.columns[1][0] == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("columns converge to the normalized perron vector") {
        auto s = state_simplex(seq, 30);
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        for (const auto& col : s.columns) {
            CHECK(col[0] == doctest::Approx(phi / (1.0 + phi)).epsilon(1e-12));
            CHECK(col[1] == doctest::Approx(1.0 / (1.0 + phi)).epsilon(1e-12));
        }
    }
    SUBCASE("diameters match exact rational arithmetic and never increase") {
        std::mt19937_64 gen(8);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 2 + trial % 3;
            MatrixSequence r;
            for (int i = 0; i < 15; ++i) {
                IntegerMatrix m(n, n);
                do {
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) m(a, b) = static_cast<long>(gen() % 3);
                } while (m.has_zero_line());
                r.push_back(m, "");
            }
            auto d = simplex_diameters(r, 15);
            REQUIRE(d.size() == 16);
            for (std::size_t k = 0; k <= 15; ++k) {
                const double oracle = exact_diameter(r, k).get_d();
                CHECK(d[k] == doctest::Approx(oracle).epsilon(1e-14));
                if (k > 0) CHECK(d[k] <= d[k - 1]);
            }
        }
    }
    SUBCASE("geometric contraction at the second eigenvalue ratio") {
        auto d = simplex_diameters(seq, 30);
        const double ratio = (3.0 - std::sqrt(5.0)) / (3.0 + std::sqrt(5.0));
        CHECK(std::abs(d[20] / d[19] - ratio) <= 0.1 * ratio);
    }
    SUBCASE("zero lines are rejected") {
        CHECK_ERROR_KIND(state_simplex(constant_sequence(IntegerMatrix{{1, 0}, {1, 0}}, 3), 2), ErrorKind::ZeroLine);
    }
}

TEST_CASE("state dimension") {
    CHECK(estimate_state_dim(constant_sequence(IntegerMatrix{{2, 1}, {1, 1}}, 40), 40) == 1);
    IntegerMatrix block{{2, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 3, 1}, {0, 0, 1, 1}};
    CHECK(estimate_state_dim(constant_sequence(block, 40), 40) == 2);
    CHECK(estimate_state_dim(constant_sequence(block, 40), 0) == 4);
    CHECK(estimate_state_dim(constant_sequence(IntegerMatrix::identity(3), 10), 10) == 3);
}

TEST_CASE("strict ergodicity verdicts") {
    SUBCASE("golden rotation is strictly ergodic") {
        auto v = strict_ergodicity_verdict(golden_exact(), 40, 12, kStateDimTolerance);
        CHECK(v.status == ErgodicityVerdict::Status::StrictlyErgodic);
        REQUIRE(v.witness);
        CHECK(v.witness->block_length <= 2);
        CHECK(is_primitive(v.witness->block_product));
        REQUIRE(v.perron);
        CHECK(std::abs(v.perron->eigenvalue - (3.0 + std::sqrt(5.0)) / 2.0) <= 1e-9);
        CHECK(v.state_dim_estimate == 1);
    }
    SUBCASE("rational lengths are inconclusive with a Keane diagnostic") {
        auto v = strict_ergodicity_verdict(rational_exact({"1/3", "2/3"}, {2, 1}), 40, 12, kStateDimTolerance);
        CHECK(v.status == ErgodicityVerdict::Status::Inconclusive);
        REQUIRE_FALSE(v.diagnostics.empty());
        CHECK(v.diagnostics.front().find("KeaneViolation") != std::string::npos);
    }
    SUBCASE("collapsed simplex without a stationary tail is likely ergodic") {
        MatrixSequence seq;
        for (long k = 1; k <= 40; ++k) seq.push_back(IntegerMatrix{{k, 1}, {1, 1}}, "");
        auto v = classify_sequence(seq, 12, kStateDimTolerance);
        CHECK_FALSE(v.witness);
        CHECK(v.simple);
        CHECK(v.final_diameter < kStateDimTolerance);
        CHECK(v.status == ErgodicityVerdict::Status::LikelyErgodic);
    }
    SUBCASE("stationary but imprimitive block is not certified") {
        auto v = classify_sequence(constant_sequence(IntegerMatrix::identity(2), 40), 12, kStateDimTolerance);
        CHECK(v.witness);
        CHECK(v.status == ErgodicityVerdict::Status::Inconclusive);
    }
    SUBCASE("flipped specs halt the induction") {
        auto v = strict_ergodicity_verdict(rational_exact({"1/3", "2/3"}, {2, 1}, {1, -1}), 40, 12, kStateDimTolerance);
        CHECK(v.status == ErgodicityVerdict::Status::Inconclusive);
        CHECK(v.diagnostics.front().find("FlipUnsupported") != std::string::npos);
    }
}

TEST_CASE("cyclic structure") {
    auto swap = cyclic_structure(IntegerMatrix{{0, 1}, {1, 0}});
    CHECK(swap.period == 2);
    CHECK(swap.classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(cyclic_structure(IntegerMatrix{{2, 1}, {1, 1}}).period == 1);
    auto three = cyclic_structure(IntegerMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(three.period == 3);
    CHECK(three.classes.size() == 3);
    CHECK_ERROR_KIND(cyclic_structure(IntegerMatrix{{1, 1}, {0, 1}}), ErrorKind::NotIrreducible);

    // period one exactly when some window of length ≤ n² of the constant sequence is positive
    std::mt19937_64 gen(12);
    std::size_t irreducible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 3;
        IntegerMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = (gen() % 3 == 0) ? 1 : 0;
        if (!strongly_connected_oracle(m)) {
            CHECK_ERROR_KIND(cyclic_structure(m), ErrorKind::NotIrreducible);
            continue;
        }
        ++irreducible;
        const auto cs = cyclic_structure(m);
        CHECK((cs.period == 1) == simplicity_check(constant_sequence(m, n * n), n * n));
        CHECK((cs.period == 1) == is_primitive(m));
        std::size_t members = 0;
        for (const auto& cls : cs.classes) members += cls.size();
        CHECK(members == n);
    }
    CHECK(irreducible > 20);
}

TEST_CASE("k-groups and measure bounds") {
    for (std::size_t n = 2; n <= 10; ++n) CHECK(k_groups(n) == std::make_pair(n, std::size_t{1}));
    CHECK_ERROR_KIND(k_groups(1), ErrorKind::InvalidArgument);
    CHECK(measure_bounds(4, false) == 2);
    CHECK(measure_bounds(4, true) == 6);
    CHECK(measure_bounds(2, false) == 1);
    CHECK_ERROR_KIND(measure_bounds(1, false), ErrorKind::InvalidArgument);
}
