#include "iet/rotation.hpp"

#include <cmath>
#include <string>

#include "iet/error.hpp"
#include "iet/scalar.hpp"

namespace iet {

namespace {

// y ↦ a/c − 1/(c²(d/c + y)) as the projective matrix (ac, ad−1; c², cd).
struct Projective {
    Integer m00, m01, m10, m11;

    static Projective step(const MoebiusMatrix& g) {
        return {g.a() * g.c(), g.a() * g.d() - 1, g.c() * g.c(), g.c() * g.d()};
    }
    Projective operator*(const Projective& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
                m10 * o.m01 + m11 * o.m11};
    }
};

std::optional<Rational> ratio(const Integer& num, const Integer& den) {
    if (den == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_perfect_square(const Integer& v) { return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

MoebiusMatrix::MoebiusMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Integer det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1)
        fail(ErrorKind::InvalidArgument, "Moebius matrix must have determinant +-1, got " + det.get_str());
}

MoebiusMatrix MoebiusMatrix::from_matrix(const IntegerMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) fail(ErrorKind::InvalidArgument, "expected a 2x2 matrix");
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

IntegerMatrix MoebiusMatrix::to_matrix() const {
    IntegerMatrix m(2, 2);
    m(0, 0) = a_;
    m(0, 1) = b_;
    m(1, 0) = c_;
    m(1, 1) = d_;
    return m;
}

RotationNumber rotation_number(std::span<const MoebiusMatrix> seq, std::size_t depth, double tol) {
    if (seq.empty()) fail(ErrorKind::InvalidArgument, "empty matrix sequence");
    if (depth == 0) fail(ErrorKind::InvalidArgument, "depth must be positive");
    for (std::size_t i = 0; i < seq.size() && i < depth; ++i)
        if (seq[i].c() == 0) fail(ErrorKind::ZeroDenominatorEntry, "c_" + std::to_string(i + 1) + " = 0");

    RotationNumber out;
    Projective prefix{1, 0, 0, 1};
    for (std::size_t k = 0; k < depth; ++k) {
        const MoebiusMatrix& g = seq[k % seq.size()];
        // T_{k+1} = (G_1⋯G_k)·[a_{k+1} : c_{k+1}]
        Integer num = prefix.m00 * g.a() + prefix.m01 * g.c();
        Integer den = prefix.m10 * g.a() + prefix.m11 * g.c();
        out.convergents.push_back(ratio(num, den));
        out.depth = k + 1;
        if (k > 0) {
            const auto& prev = out.convergents[k - 1];
            const auto& cur = out.convergents[k];
            if (prev && cur && std::abs(Rational(*cur - *prev).get_d()) <= tol) {
                out.converged = true;
                break;
            }
        }
        prefix = prefix * Projective::step(g);
    }
    for (auto it = out.convergents.rbegin(); it != out.convergents.rend(); ++it)
        if (*it) {
            out.value = (*it)->get_d();
            return out;
        }
    out.value = std::nan("");
    return out;
}

QuadraticSurd detect_quadratic_surd(std::span<const MoebiusMatrix> block) {
    if (block.empty()) fail(ErrorKind::InvalidArgument, "empty period");
    Projective t{1, 0, 0, 1};
    for (const auto& g : block) {
        if (g.c() == 0) fail(ErrorKind::ZeroDenominatorEntry, "period contains c = 0");
        t = t * Projective::step(g);
    }
    // y = (m00 y + m01)/(m10 y + m11)  <=>  m10 y² + (m11 − m00) y − m01 = 0
    Integer qa = t.m10;
    Integer qb = t.m11 - t.m00;
    Integer qc = -t.m01;
    if (qa == 0) {
        if (qb == 0 && qc != 0) fail(ErrorKind::NoRealFixedPoint, "period is a translation without finite fixed point");
        fail(ErrorKind::RationalFixedPoint, "period fixes a rational point");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), qa.get_mpz_t(), qb.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), qc.get_mpz_t());
    if (sgn(qa) < 0) g = -g;
    qa /= g;
    qb /= g;
    qc /= g;

    const Integer disc = qb * qb - 4 * qa * qc;
    if (sgn(disc) < 0) fail(ErrorKind::NoRealFixedPoint, "fixed-point discriminant " + disc.get_str() + " is negative");
    if (is_perfect_square(disc)) fail(ErrorKind::RationalFixedPoint, "fixed-point discriminant " + disc.get_str() + " is a square");
    if (!disc.fits_slong_p()) fail(ErrorKind::InvalidArgument, "discriminant too large for the quadratic field type");

    const double det = Integer(t.m00 * t.m11 - t.m01 * t.m10).get_d();
    QuadraticSurd best;
    double best_rate = 0.0;
    for (int s : {1, -1}) {
        QuadraticNumber root(Rational(-qb, 2 * qa), Rational(Integer(s), 2 * qa), disc.get_si());
        const double y = root.to_double();
        const double slope = t.m10.get_d() * y + t.m11.get_d();
        const double rate = std::abs(det) / (slope * slope);
        if (s == 1 || rate < best_rate) {
            best = QuadraticSurd{qa, qb, qc, s, root, y};
            best_rate = rate;
        }
    }
    return best;
}

std::vector<Integer> continued_fraction(const QuadraticNumber& x, std::size_t depth) {
    std::vector<Integer> out;
    QuadraticNumber rest = x;
    for (std::size_t k = 0; k < depth; ++k) {
        Integer q = rest.floor();
        out.push_back(q);
        rest -= QuadraticNumber(Rational(q));
        if (rest.sign() == 0) break;
        rest = rest.inverse();
    }
    return out;
}

std::vector<Integer> continued_fraction(double x, std::size_t depth, double tol) {
    if (!std::isfinite(x)) fail(ErrorKind::InvalidArgument, "continued fraction of a non-finite value");
    const double delta = tol * std::max(1.0, std::abs(x));
    Rational lo(x - delta);
    Rational hi(x + delta);
    std::vector<Integer> out;
    for (std::size_t k = 0; k < depth; ++k) {
        Integer qlo = floor_of(lo);
        Integer qhi = floor_of(hi);
        if (qlo != qhi)
            fail(ErrorKind::PrecisionLoss, "partial quotient " + std::to_string(k) + " is not determined at tolerance " +
                                               ScalarTraits<double>::to_string(tol));
        out.push_back(qlo);
        Rational flo = lo - Rational(qlo);
        Rational fhi = hi - Rational(qhi);
        if (flo == 0)
            fail(ErrorKind::PrecisionLoss, "interval reaches a rational endpoint at quotient " + std::to_string(k));
        // reciprocal reverses the order of the endpoints
        lo = 1 / fhi;
        hi = 1 / flo;
    }
    return out;
}

bool tails_coincide(const std::vector<Integer>& x, const std::vector<Integer>& y, std::size_t depth) {
    const std::size_t half = std::max<std::size_t>(1, depth / 2);
    for (std::size_t i = 1; i <= half && i < x.size(); ++i) {
        for (std::size_t j = 1; j <= half && j < y.size(); ++j) {
            const std::size_t overlap = std::min(x.size() - i, y.size() - j);
            if (overlap == 0) continue;
            bool same = true;
            for (std::size_t t = 0; t < overlap && same; ++t) same = x[i + t] == y[j + t];
            if (same) return true;
        }
    }
    return false;
}

bool modular_equivalent(const QuadraticNumber& x, const QuadraticNumber& y, std::size_t depth) {
    if (depth < 5) fail(ErrorKind::InvalidArgument, "equivalence test needs depth >= 5");
    // PGL2(Z) acts transitively on Q
    if (x.is_rational() || y.is_rational()) return x.is_rational() && y.is_rational();
    if (x.radicand() != y.radicand()) return false;
    return tails_coincide(continued_fraction(x, depth), continued_fraction(y, depth), depth);
}

bool modular_equivalent(double x, double y, std::size_t depth, double tol) {
    if (depth < 5) fail(ErrorKind::InvalidArgument, "equivalence test needs depth >= 5");
    return tails_coincide(continued_fraction(x, depth, tol), continued_fraction(y, depth, tol), depth);
}

}  // namespace iet
