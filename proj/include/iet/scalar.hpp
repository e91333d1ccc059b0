#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "iet/quadratic.hpp"

namespace iet {

// The two arithmetic modes of the library: exact elements of Q or Q(sqrt(d)),
// and binary64 floats.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* mode = "float";

    static double from_rational(const Rational& q) { return q.get_d(); }
    static double to_double(double x) { return x; }
    static std::string to_string(double x) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, end);
    }
};

template <>
struct ScalarTraits<QuadraticNumber> {
    static constexpr bool exact = true;
    static constexpr const char* mode = "exact";

    static QuadraticNumber from_rational(const Rational& q) { return QuadraticNumber(q); }
    static double to_double(const QuadraticNumber& x) { return x.to_double(); }
    static std::string to_string(const QuadraticNumber& x) { return x.to_string(); }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
double to_double(const S& x) {
    return ScalarTraits<S>::to_double(x);
}

template <Scalar S>
std::string scalar_to_string(const S& x) {
    return ScalarTraits<S>::to_string(x);
}

}  // namespace iet
