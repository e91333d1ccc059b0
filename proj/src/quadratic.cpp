#include "iet/quadratic.hpp"

#include <cctype>
#include <cmath>

#include "iet/error.hpp"

namespace iet {

namespace {

int rsign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Splits d = s^2 * f with f squarefree; returns {s, f}.
std::pair<std::int64_t, std::int64_t> square_part(std::int64_t d) {
    std::int64_t s = 1;
    std::int64_t f = d;
    for (std::int64_t p = 2; p * p <= f; ++p) {
        while (f % (p * p) == 0) {
            f /= p * p;
            s *= p;
        }
    }
    return {s, f};
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    QuadraticNumber expression(bool nested = false) {
        QuadraticNumber result;
        skip();
        bool first = true;
        while (!done() && !(nested && peek() == ')')) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            QuadraticNumber t = term();
            result += sign > 0 ? t : -t;
            first = false;
            skip();
        }
        if (first) error("empty number");
        return result;
    }

private:
    QuadraticNumber term() {
        if (consume('(')) {
            QuadraticNumber inner = expression(true);
            if (!consume(')')) error("expected ')'");
            skip();
            if (consume('/')) inner /= divisor();
            return inner;
        }
        if (starts_with("sqrt")) {
            QuadraticNumber r = radical();
            if (consume('/')) r /= divisor();
            return r;
        }
        Rational coeff = number();
        skip();
        if (consume('/')) coeff /= nonzero(number());
        skip();
        if (consume('*')) {
            skip();
            QuadraticNumber r = radical();
            if (consume('/')) r /= divisor();
            return QuadraticNumber(coeff) * r;
        }
        return QuadraticNumber(coeff);
    }

    QuadraticNumber divisor() {
        if (consume('(')) {
            QuadraticNumber inner = expression(true);
            if (!consume(')')) error("expected ')'");
            if (inner.sign() == 0) error("division by zero");
            return inner;
        }
        return QuadraticNumber(nonzero(number()));
    }

    Rational nonzero(Rational r) {
        if (r == 0) error("division by zero");
        return r;
    }

    QuadraticNumber radical() {
        if (!starts_with("sqrt")) error("expected sqrt(");
        pos_ += 4;
        skip();
        if (!consume('(')) error("expected '(' after sqrt");
        skip();
        std::size_t begin = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (begin == pos_) error("expected integer radicand");
        std::int64_t d = std::stoll(std::string(text_.substr(begin, pos_ - begin)));
        skip();
        if (!consume(')')) error("expected ')'");
        skip();
        return QuadraticNumber::sqrt(d);
    }

    Rational number() {
        skip();
        std::size_t begin = pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
        if (begin == pos_) error("expected number");
        Rational r = parse_rational(text_.substr(begin, pos_ - begin));
        skip();
        return r;
    }

    bool consume(char c) {
        if (!done() && peek() == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }
    bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError, what + " in \"" + std::string(text_) + "\" at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { fail(ErrorKind::ParseError, "not a rational number: \"" + s + "\""); };
    if (s.empty()) bad();
    try {
        if (auto dot = s.find('.'); dot != std::string::npos) {
            if (s.find('/') != std::string::npos) bad();
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") bad();
            Rational r{Integer(digits, 10), 1};
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
            r /= Rational(scale);
            r.canonicalize();
            return r;
        }
        Rational r(s, 10);
        if (r.get_den() == 0) bad();
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
    }
    fail(ErrorKind::ParseError, "not a rational number: \"" + s + "\"");
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ < 0) fail(ErrorKind::InvalidArgument, "negative radicand");
    if (d_ == 0) b_ = 0;
    auto [s, f] = square_part(d_);
    if (f <= 1) {
        a_ += b_ * Rational(s);
        b_ = 0;
        d_ = 0;
    } else {
        b_ *= Rational(s);
        d_ = f;
    }
    normalize();
}

QuadraticNumber QuadraticNumber::parse(std::string_view text) { return Parser(text).expression(); }

void QuadraticNumber::normalize() {
    if (b_ == 0) d_ = 0;
    // get_d truncates (relative error < 2^-52); √d, the product and the sum
    // each add at most half an ulp of a value bounded by |a| + |b|·√d
    const double a = a_.get_d();
    if (d_ == 0) {
        approx_ = a;
        approx_err_ = std::abs(a) * 0x1.0p-52;
        return;
    }
    const double bd = b_.get_d() * std::sqrt(static_cast<double>(d_));
    approx_ = a + bd;
    approx_err_ = (std::abs(a) + std::abs(bd)) * 0x1.0p-49;
}

std::int64_t QuadraticNumber::common_radicand(const QuadraticNumber& rhs) const {
    if (d_ == 0) return rhs.d_;
    if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
    fail(ErrorKind::FieldMismatch,
         "cannot combine Q(sqrt(" + std::to_string(d_) + ")) with Q(sqrt(" + std::to_string(rhs.d_) + "))");
}

int QuadraticNumber::sign() const {
    int sa = rsign(a_);
    int sb = rsign(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: the larger of a^2 and b^2 d decides; equality is impossible for squarefree d > 1
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
}

Rational QuadraticNumber::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadraticNumber QuadraticNumber::inverse() const {
    Rational n = norm();
    if (n == 0) fail(ErrorKind::DomainError, "division by zero");
    return {a_ / n, -b_ / n, d_};
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
    d_ = common_radicand(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
    d_ = common_radicand(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
    std::int64_t d = common_radicand(rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
    if (rhs.d_ == 0) {
        if (rhs.a_ == 0) fail(ErrorKind::DomainError, "division by zero");
        a_ /= rhs.a_;
        b_ /= rhs.a_;
        normalize();
        return *this;
    }
    return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d_ == 0 || y.d_ == 0 || x.d_ == y.d_) {
        const double gap = x.approx_ - y.approx_;
        // the subtraction adds at most one more half ulp of the larger operand
        const double err = x.approx_err_ + y.approx_err_ + (std::abs(x.approx_) + std::abs(y.approx_)) * 0x1.0p-52;
        if (std::isfinite(gap) && std::isfinite(err)) {
            if (gap > err) return std::strong_ordering::greater;
            if (gap < -err) return std::strong_ordering::less;
        }
    }
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Integer QuadraticNumber::floor() const {
    if (d_ == 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return q;
    }
    Integer k(std::floor(to_double()));
    while (*this < QuadraticNumber(Rational(k))) --k;
    while (*this >= QuadraticNumber(Rational(k + 1))) ++k;
    return k;
}

double QuadraticNumber::to_double() const {
    if (d_ == 0) return a_.get_d();
    double root = std::sqrt(static_cast<double>(d_));
    if (rsign(a_) * rsign(b_) < 0) {
        // a + b√d = (a² − b²d) / (a − b√d); the denominator has no cancellation
        return norm().get_d() / (a_.get_d() - b_.get_d() * root);
    }
    return a_.get_d() + b_.get_d() * root;
}

std::string QuadraticNumber::to_string() const {
    if (d_ == 0) return a_.get_str();
    std::string radical = "sqrt(" + std::to_string(d_) + ")";
    std::string coeff;
    Rational mag = abs(b_);
    if (mag != 1) coeff = mag.get_str() + "*";
    if (a_ == 0) return (rsign(b_) < 0 ? "-" : "") + coeff + radical;
    return a_.get_str() + (rsign(b_) < 0 ? "-" : "+") + coeff + radical;
}

}  // namespace iet
