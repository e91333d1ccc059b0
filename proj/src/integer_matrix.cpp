#include "iet/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "iet/error.hpp"

namespace iet {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) >= 0; });
}

bool IntegerMatrix::is_zero_one() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0 || v == 1; });
}

bool IntegerMatrix::is_strictly_positive() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) > 0; });
}

bool IntegerMatrix::has_zero_line() const {
    for (std::size_t r = 0; r < rows_; ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < cols_ && zero; ++c) zero = (*this)(r, c) == 0;
        if (zero) return true;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < rows_ && zero; ++r) zero = (*this)(r, c) == 0;
        if (zero) return true;
    }
    return false;
}

Integer IntegerMatrix::entry_sum() const {
    Integer s = 0;
    for (const auto& v : data_) s += v;
    return s;
}

Integer IntegerMatrix::determinant() const {
    if (!is_square()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    // fraction-free Bareiss elimination
    const std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<Integer> a = data_;
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

std::vector<double> IntegerMatrix::to_double() const {
    std::vector<double> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(v.get_d());
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix dimensions do not match for multiplication");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

IntegerMatrix product(const std::vector<IntegerMatrix>& factors, std::size_t begin, std::size_t end) {
    if (begin >= end || end > factors.size()) fail(ErrorKind::InvalidArgument, "empty or out-of-range product");
    IntegerMatrix out = factors[begin];
    for (std::size_t k = begin + 1; k < end; ++k) out = out * factors[k];
    return out;
}

Pattern pattern_of(const IntegerMatrix& m) {
    Pattern p(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) p[r][c] = m(r, c) != 0;
    return p;
}

Pattern pattern_product(const Pattern& a, const Pattern& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Pattern out(rows, std::vector<bool>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] || b[k][j];
    return out;
}

bool pattern_positive(const Pattern& p) {
    for (const auto& row : p)
        for (bool v : row)
            if (!v) return false;
    return true;
}

bool is_primitive(const IntegerMatrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    if (!m.is_nonnegative()) return false;
    const std::size_t n = m.rows();
    const std::size_t bound = (n - 1) * (n - 1) + 1;
    const Pattern base = pattern_of(m);
    Pattern power = base;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (pattern_positive(power)) return true;
        power = pattern_product(power, base);
    }
    return false;
}

}  // namespace iet
