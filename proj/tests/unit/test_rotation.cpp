#include "helpers.hpp"

#include <array>
#include <cmath>
#include <random>

#include "iet/rotation.hpp"

using namespace iet;
using namespace iet::test;

namespace {

const QuadraticNumber kPhi = QuadraticNumber::parse("1/2+1/2*sqrt(5)");

// Evaluates the fraction bottom-up with the tail replaced by zero.
double truncated_fraction(const std::vector<std::array<double, 4>>& g, std::size_t k) {
    double tail = 0.0;
    for (std::size_t i = k; i-- > 0;) {
        const auto& [a, b, c, d] = g[i];
        (void)b;
        if (i + 1 == k) {
            tail = a / c;
            continue;
        }
        tail = a / c - 1.0 / (c * c * (d / c + tail));
    }
    return tail;
}

// Continued fraction of (p + √d)/q by the classical integer recurrence; needs q | d − p².
std::vector<long> surd_expansion(long p, long d, long q, std::size_t depth) {
    std::vector<long> out;
    const double root = std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < depth; ++k) {
        const long a = static_cast<long>(std::floor((p + root) / q));
        out.push_back(a);
        p = a * q - p;
        q = (d - p * p) / q;
    }
    return out;
}

}  // namespace

TEST_CASE("moebius matrices") {
    CHECK_ERROR_KIND(MoebiusMatrix(2, 0, 0, 2), ErrorKind::InvalidArgument);
    auto m = MoebiusMatrix::from_matrix(IntegerMatrix{{2, 1}, {1, 1}});
    CHECK(m.to_matrix() == IntegerMatrix{{2, 1}, {1, 1}});
    CHECK_NOTHROW(MoebiusMatrix(0, 1, 1, 0));
}

TEST_CASE("rotation number of constant sequences") {
    const std::vector<MoebiusMatrix> golden{MoebiusMatrix(2, 1, 1, 1)};
    auto r = rotation_number(golden, 60, 1e-14);
    CHECK(r.converged);
    CHECK(std::abs(r.value - (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-10);
    CHECK(r.convergents.front() == Rational(2));

    auto shallow = rotation_number(golden, 1, 1e-14);
    CHECK(shallow.depth == 1);
    CHECK(shallow.value == 2.0);
    CHECK_FALSE(shallow.converged);

    CHECK_ERROR_KIND(rotation_number(std::vector<MoebiusMatrix>{MoebiusMatrix(1, 1, 0, 1)}, 5, 1e-12),
                     ErrorKind::ZeroDenominatorEntry);
    CHECK_ERROR_KIND(rotation_number(std::vector<MoebiusMatrix>{}, 5, 1e-12), ErrorKind::InvalidArgument);
    CHECK_ERROR_KIND(rotation_number(golden, 0, 1e-12), ErrorKind::InvalidArgument);
}

TEST_CASE("convergents agree with direct bottom-up evaluation") {
    std::mt19937_64 gen(9);
    const std::vector<MoebiusMatrix> pool{MoebiusMatrix(2, 1, 1, 1), MoebiusMatrix(1, 1, 1, 2), MoebiusMatrix(3, 2, 1, 1),
                                          MoebiusMatrix(1, 0, 1, 1), MoebiusMatrix(3, 1, 2, 1)};
    for (int t = 0; t < 30; ++t) {
        std::vector<MoebiusMatrix> seq;
        std::vector<std::array<double, 4>> raw;
        for (int i = 0; i < 8; ++i) {
            const auto& m = pool[gen() % pool.size()];
            seq.push_back(m);
            raw.push_back({m.a().get_d(), m.b().get_d(), m.c().get_d(), m.d().get_d()});
        }
        auto r = rotation_number(seq, 8, 0.0);
        for (std::size_t k = 1; k <= r.convergents.size(); ++k) {
            const double direct = truncated_fraction(raw, k);
            if (!r.convergents[k - 1]) {
                CHECK_FALSE(std::isfinite(direct));
                continue;
            }
            CHECK(r.convergents[k - 1]->get_d() == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("non-convergent sequences are reported") {
    // [[1,1],[1,0]] maps the truncations to a 2-cycle 1, 0, 1, ...
    auto r = rotation_number(std::vector<MoebiusMatrix>{MoebiusMatrix(1, 1, 1, 0)}, 30, 1e-12);
    CHECK_FALSE(r.converged);
    CHECK(r.depth == 30);
}

TEST_CASE("quadratic surd detection") {
    const std::vector<MoebiusMatrix> golden{MoebiusMatrix(2, 1, 1, 1)};
    auto s = detect_quadratic_surd(golden);
    CHECK(s.a == 1);
    CHECK(s.b == -1);
    CHECK(s.c == -1);
    CHECK(s.root == kPhi);
    const QuadraticNumber value = QuadraticNumber(Rational(s.a)) * s.root * s.root +
                                  QuadraticNumber(Rational(s.b)) * s.root + QuadraticNumber(Rational(s.c));
    CHECK(value.sign() == 0);
    CHECK(std::abs(s.approx - rotation_number(golden, 60, 1e-15).value) <= 1e-12);

    // period two: root agrees with the converged fraction
    const std::vector<MoebiusMatrix> two{MoebiusMatrix(1, 1, 1, 2), MoebiusMatrix(3, 2, 1, 1)};
    auto s2 = detect_quadratic_surd(two);
    CHECK(sgn(s2.a) > 0);
    CHECK(std::abs(s2.approx - rotation_number(two, 200, 1e-15).value) <= 1e-10);

    CHECK_ERROR_KIND(detect_quadratic_surd(std::vector<MoebiusMatrix>{MoebiusMatrix(1, 0, 1, 1)}),
                     ErrorKind::RationalFixedPoint);
    CHECK_ERROR_KIND(detect_quadratic_surd(std::vector<MoebiusMatrix>{MoebiusMatrix(1, 1, 1, 0)}),
                     ErrorKind::NoRealFixedPoint);
    CHECK_ERROR_KIND(detect_quadratic_surd(std::vector<MoebiusMatrix>{MoebiusMatrix(1, 1, 0, 1)}),
                     ErrorKind::ZeroDenominatorEntry);
}

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(kPhi, 6) == std::vector<Integer>(6, 1));
    CHECK(continued_fraction(QuadraticNumber::parse("43/19"), 10) == std::vector<Integer>{2, 3, 1, 4});
    for (long d : {2L, 3L, 7L, 13L, 19L}) {
        const auto exact = continued_fraction(QuadraticNumber::sqrt(d), 30);
        const auto oracle = surd_expansion(0, d, 1, 30);
        REQUIRE(exact.size() == oracle.size());
        for (std::size_t i = 0; i < exact.size(); ++i) CHECK(exact[i] == oracle[i]);
    }
    const auto float_cf = continued_fraction(std::sqrt(2.0), 15, 1e-15);
    CHECK(float_cf.front() == 1);
    for (std::size_t i = 1; i < float_cf.size(); ++i) CHECK(float_cf[i] == 2);
    CHECK_ERROR_KIND(continued_fraction(std::sqrt(2.0), 40, 1e-15), ErrorKind::PrecisionLoss);
}

TEST_CASE("modular equivalence") {
    const QuadraticNumber mapped = (QuadraticNumber(2) * kPhi + QuadraticNumber(1)) / (kPhi + QuadraticNumber(1));
    CHECK(modular_equivalent(kPhi, mapped));
    CHECK_FALSE(modular_equivalent(kPhi, QuadraticNumber::sqrt(2)));
    CHECK_FALSE(modular_equivalent(QuadraticNumber::sqrt(2), QuadraticNumber::sqrt(3)));
    CHECK(modular_equivalent(QuadraticNumber::parse("2/7"), QuadraticNumber::parse("-5/3")));
    CHECK_FALSE(modular_equivalent(QuadraticNumber::parse("2/7"), kPhi));
    // same field, but the minimal polynomials have discriminants 8 and 288
    CHECK_FALSE(modular_equivalent(QuadraticNumber::sqrt(2), QuadraticNumber::sqrt(8) / QuadraticNumber(3)));
    CHECK_ERROR_KIND(modular_equivalent(kPhi, kPhi, 4), ErrorKind::InvalidArgument);

    SUBCASE("reflexive and symmetric on seeded surds") {
        std::mt19937_64 gen(10);
        const std::vector<long> radicands{2, 3, 5, 6, 7, 10, 11, 13};
        for (int t = 0; t < 50; ++t) {
            const long d = radicands[gen() % radicands.size()];
            const QuadraticNumber x(Rational(static_cast<long>(gen() % 21) - 10, 1 + gen() % 7),
                                    Rational(1 + static_cast<long>(gen() % 5), 1 + gen() % 4), d);
            const long a = 1 + static_cast<long>(gen() % 4), b = static_cast<long>(gen() % 5);
            // y = (a·x + ab − 1)/(x + b) has determinant one
            const QuadraticNumber y = (QuadraticNumber(a) * x + QuadraticNumber(a * b - 1)) / (x + QuadraticNumber(b));
            const long e = radicands[gen() % radicands.size()];
            const QuadraticNumber z(Rational(static_cast<long>(gen() % 9)), Rational(1), e);
            CHECK(modular_equivalent(x, x));
            CHECK(modular_equivalent(x, y));
            CHECK(modular_equivalent(y, x));
            CHECK(modular_equivalent(x, z) == modular_equivalent(z, x));
        }
    }

    SUBCASE("floating point at a reachable depth") {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        CHECK(modular_equivalent(phi, (2.0 * phi + 1.0) / (phi + 1.0), 16));
        CHECK_FALSE(modular_equivalent(phi, std::sqrt(2.0), 16));
        CHECK_ERROR_KIND(modular_equivalent(std::sqrt(2.0), std::sqrt(3.0), 60), ErrorKind::PrecisionLoss);
    }
}
