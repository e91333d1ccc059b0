#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace iet {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
//
// The radicand is kept squarefree and > 1; a number whose irrational part is
// zero is canonically rational (radicand 0) and combines with any field.
// Mixing two different radicands raises ErrorKind::FieldMismatch.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(long value) : a_(value) { normalize(); }  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational value) : a_(std::move(value)) {  // NOLINT
        a_.canonicalize();
        normalize();
    }
    QuadraticNumber(Rational a, Rational b, std::int64_t radicand);

    static QuadraticNumber sqrt(std::int64_t radicand) { return {Rational(0), Rational(1), radicand}; }

    // Accepts "p", "p/q", decimals like "0.25", and sums/differences of such
    // terms with "c*sqrt(d)", "sqrt(d)", "sqrt(d)/q", e.g. "-1/2+1/2*sqrt(5)".
    static QuadraticNumber parse(std::string_view text);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& irrational_part() const noexcept { return b_; }
    std::int64_t radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return d_ == 0; }

    int sign() const;
    Integer floor() const;
    double to_double() const;
    std::string to_string() const;

    QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
    // a^2 - b^2 d, the field norm.
    Rational norm() const;
    QuadraticNumber inverse() const;

    QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
    QuadraticNumber& operator+=(const QuadraticNumber& rhs);
    QuadraticNumber& operator-=(const QuadraticNumber& rhs);
    QuadraticNumber& operator*=(const QuadraticNumber& rhs);
    QuadraticNumber& operator/=(const QuadraticNumber& rhs);

    friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
    friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
    friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
    friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

private:
    std::int64_t common_radicand(const QuadraticNumber& rhs) const;
    void normalize();

    Rational a_{0};
    Rational b_{0};
    std::int64_t d_ = 0;
    // a + b·√d in double precision and a bound on its absolute error, kept
    // current by normalize() so comparisons can usually skip exact arithmetic
    double approx_ = 0.0;
    double approx_err_ = 0.0;
};

// Parses an integer or "p/q" or a finite decimal into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace iet
