#pragma once

#include <doctest.h>

#include <optional>
#include <vector>

#include "iet/error.hpp"
#include "iet/interval_exchange.hpp"

namespace iet::test {

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

#define CHECK_ERROR_KIND(expr, expected) CHECK(::iet::test::error_kind([&] { (void)(expr); }) == (expected))

inline QuadraticNumber q(const char* text) { return QuadraticNumber::parse(text); }

// α = (√5 − 1)/2; the golden rotation exchanges [0,1−α) and [1−α,1).
inline QuadraticNumber golden_alpha() { return q("-1/2+1/2*sqrt(5)"); }

inline ExactExchange golden_exact() {
    const QuadraticNumber a = golden_alpha();
    return ExactExchange::validate({QuadraticNumber(1) - a, a}, Permutation::from_one_based(std::vector<long>{2, 1}));
}

inline double golden_alpha_double() { return 0.6180339887498949; }

inline FloatExchange golden_float() {
    const double a = golden_alpha_double();
    return FloatExchange::validate({1.0 - a, a}, Permutation::from_one_based(std::vector<long>{2, 1}));
}

inline ExactExchange rational_exact(std::vector<const char*> lengths, std::vector<long> pi, std::vector<int> signs = {}) {
    std::vector<QuadraticNumber> l;
    for (auto* s : lengths) l.push_back(q(s));
    if (signs.empty()) signs.assign(l.size(), 1);
    return ExactExchange::validate(std::move(l), Permutation::from_one_based(pi), std::move(signs));
}

}  // namespace iet::test
