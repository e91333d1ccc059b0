#include "helpers.hpp"

#include <random>

#include <cmath>

#include "iet/quadratic.hpp"

using namespace iet;
using iet::test::q;

TEST_CASE("quadratic numbers parse into canonical form") {
    CHECK(q("1/3").is_rational());
    CHECK(q("2/6") == q("1/3"));
    CHECK(q("0.25") == QuadraticNumber(Rational(1, 4)));
    CHECK(q("-0.5") == QuadraticNumber(Rational(-1, 2)));
    CHECK(q("sqrt(8)") == QuadraticNumber(Rational(0), Rational(2), 2));
    CHECK(q("sqrt(4)") == QuadraticNumber(2));
    CHECK(q("sqrt(0)") == QuadraticNumber(0));
    CHECK(q("(1+sqrt(5))/2") == q("1/2+1/2*sqrt(5)"));
    CHECK(q("sqrt(5)/2") == q("1/2*sqrt(5)"));
    CHECK(q("(4+2*sqrt(5))/(3+sqrt(5))") == q("1/2+1/2*sqrt(5)"));
    CHECK_ERROR_KIND(q("1/0"), ErrorKind::ParseError);
    CHECK_ERROR_KIND(q("abc"), ErrorKind::ParseError);
    CHECK_ERROR_KIND(q(""), ErrorKind::ParseError);
    CHECK_ERROR_KIND(q("sqrt(2)+sqrt(3)"), ErrorKind::FieldMismatch);
}

TEST_CASE("quadratic arithmetic is exact") {
    const QuadraticNumber phi = q("1/2+1/2*sqrt(5)");
    CHECK(phi * phi - phi - QuadraticNumber(1) == QuadraticNumber(0));
    CHECK(phi.inverse() == phi - QuadraticNumber(1));
    CHECK(phi.norm() == Rational(-1));
    CHECK(phi.conjugate() == q("1/2-1/2*sqrt(5)"));
    CHECK((phi / phi) == QuadraticNumber(1));
    CHECK((phi - phi).is_rational());
    CHECK_ERROR_KIND(QuadraticNumber(0).inverse(), ErrorKind::DomainError);
    CHECK(q("sqrt(2)") * q("sqrt(2)") == QuadraticNumber(2));
}

TEST_CASE("quadratic comparison and floor agree with a high-precision oracle") {
    // oracle: sign of a + b√d from exact integer comparison of a² and b²d
    for (long an = -7; an <= 7; ++an) {
        for (long bn = -7; bn <= 7; ++bn) {
            for (long d : {2L, 3L, 5L, 7L}) {
                Rational a(an, 3), b(bn, 2);
                QuadraticNumber x(a, b, d);
                const double approx = a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d));
                int expected = 0;
                if (an != 0 || bn != 0) {
                    if (approx > 1e-9) expected = 1;
                    else if (approx < -1e-9) expected = -1;
                }
                CHECK(x.sign() == expected);
                CHECK(x.floor() == Integer(static_cast<long>(std::floor(approx))));
            }
        }
    }
    // cancellation: φ^40 − F_40·φ − F_39 is exactly 0
    QuadraticNumber phi = q("1/2+1/2*sqrt(5)");
    QuadraticNumber p = 1;
    for (int i = 0; i < 40; ++i) p *= phi;
    CHECK(p == QuadraticNumber(102334155L) * phi + QuadraticNumber(63245986L));
    // φ^40 + ψ^40 = L_40 with ψ = −1/φ, so φ^40 − L_40 = −ψ^40 < 0
    const QuadraticNumber tiny = p - QuadraticNumber(228826127L);
    CHECK(tiny.sign() == -1);
    CHECK(tiny.to_double() == doctest::Approx(-std::pow(0.6180339887498949, 40)).epsilon(1e-9));
}

TEST_CASE("quadratic numbers print and re-parse") {
    for (const char* s : {"0", "1/3", "-2", "-1/2+1/2*sqrt(5)", "3/2-1/2*sqrt(5)", "sqrt(2)", "-sqrt(7)/3"}) {
        const QuadraticNumber x = q(s);
        CHECK(QuadraticNumber::parse(x.to_string()) == x);
    }
}

TEST_CASE("ordering agrees with the exact sign of the difference on near ties") {
    std::mt19937_64 gen(14);
    // convergents p/q of √d differ from it by less than 1/q², far below double resolution for large q
    for (long d : {2L, 3L, 5L, 7L}) {
        const QuadraticNumber root = QuadraticNumber::sqrt(d);
        Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;
        QuadraticNumber rest = root;
        for (int k = 0; k < 60; ++k) {
            const Integer a = rest.floor();
            Integer p2 = a * p0 + p1, q2 = a * q0 + q1;
            p1 = p0, q1 = q0, p0 = p2, q0 = q2;
            rest = (rest - QuadraticNumber(Rational(a))).inverse();
            const QuadraticNumber conv(Rational(p0, q0));
            const int exact = (conv - root).sign();
            CHECK((conv < root) == (exact < 0));
            CHECK((conv > root) == (exact > 0));
            CHECK(exact != 0);
        }
    }
    for (int t = 0; t < 2000; ++t) {
        const Rational a(static_cast<long>(gen() % 2001) - 1000, 1 + gen() % 997);
        const Rational b(static_cast<long>(gen() % 41) - 20, 1 + gen() % 13);
        const QuadraticNumber x(a, b, 5);
        const QuadraticNumber eps(Rational(0), Rational(1, static_cast<unsigned long>(1) << (gen() % 60)), 5);
        const QuadraticNumber y = (gen() % 2) ? x + eps : x - eps;
        const int exact = (x - y).sign();
        CHECK(((x <=> y) < 0) == (exact < 0));
        CHECK(((x <=> y) == 0) == (exact == 0));
    }
}
