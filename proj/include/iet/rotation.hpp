#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "iet/integer_matrix.hpp"
#include "iet/quadratic.hpp"

namespace iet {

// Integral 2×2 matrix (a b; c d) with ad − bc = ±1.
class MoebiusMatrix {
public:
    MoebiusMatrix(Integer a, Integer b, Integer c, Integer d);
    static MoebiusMatrix from_matrix(const IntegerMatrix& m);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }
    const Integer& d() const noexcept { return d_; }
    IntegerMatrix to_matrix() const;

private:
    Integer a_, b_, c_, d_;
};

struct RotationNumber {
    // Truncations T_1..T_depth of the fraction; nullopt marks a truncation
    // whose innermost denominator vanished (the point at infinity).
    std::vector<std::optional<Rational>> convergents;
    double value = 0.0;  // last finite convergent, rounded once
    bool converged = false;
    std::size_t depth = 0;
};

// Evaluates
//   θ = a1/c1 − c1^-2 / (d1/c1 + a2/c2 − c2^-2 / (d2/c2 + a3/c3 − …))
// truncated after a_k/c_k for k = 1, 2, … until two successive truncations
// differ by at most tol (converged) or `depth` truncations are spent. A
// sequence shorter than `depth` is repeated periodically. Throws
// ZeroDenominatorEntry if some c_i = 0.
RotationNumber rotation_number(std::span<const MoebiusMatrix> seq, std::size_t depth, double tol);

// A x² + B x + C = 0 with A > 0, gcd(A,B,C) = 1 and non-square discriminant.
struct QuadraticSurd {
    Integer a, b, c;
    int root_sign = 1;     // selects (−B + root_sign·√disc)/(2A)
    QuadraticNumber root;  // exact value in Q(√disc)
    double approx = 0.0;
};

// Fixed-point quadratic of the map y ↦ T(y) realizing one period of the
// fraction above; returns its attracting root. Throws NoRealFixedPoint,
// RationalFixedPoint.
QuadraticSurd detect_quadratic_surd(std::span<const MoebiusMatrix> block);

// Regular continued-fraction partial quotients.
std::vector<Integer> continued_fraction(const QuadraticNumber& x, std::size_t depth);
// Each quotient must agree across [x − δ, x + δ], δ = tol·max(1,|x|);
// throws PrecisionLoss when fewer than `depth` quotients are stable.
std::vector<Integer> continued_fraction(double x, std::size_t depth, double tol);

// Tail equivalence of two expansions of length ≥ depth: some suffixes
// starting within the first half agree on everything that remains.
bool tails_coincide(const std::vector<Integer>& x, const std::vector<Integer>& y, std::size_t depth);

inline constexpr std::size_t kDefaultEquivalenceDepth = 40;

bool modular_equivalent(const QuadraticNumber& x, const QuadraticNumber& y,
                        std::size_t depth = kDefaultEquivalenceDepth);
bool modular_equivalent(double x, double y, std::size_t depth = kDefaultEquivalenceDepth, double tol = 1e-15);

}  // namespace iet
