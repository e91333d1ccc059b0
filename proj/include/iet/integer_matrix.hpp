#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "iet/quadratic.hpp"

namespace iet {

// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_nonnegative() const;
    bool is_zero_one() const;
    bool is_strictly_positive() const;
    // True if some row or column is entirely zero.
    bool has_zero_line() const;
    Integer entry_sum() const;
    Integer determinant() const;

    std::vector<double> to_double() const;
    std::string to_string() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Product of a nonempty ordered list.
IntegerMatrix product(const std::vector<IntegerMatrix>& factors, std::size_t begin, std::size_t end);

// Zero/nonzero pattern, used for primitivity and connectivity questions.
using Pattern = std::vector<std::vector<bool>>;
Pattern pattern_of(const IntegerMatrix& m);
Pattern pattern_product(const Pattern& a, const Pattern& b);
bool pattern_positive(const Pattern& p);

// Some power of the square nonnegative matrix is strictly positive.
// Checked up to the Wielandt bound (n−1)²+1.
bool is_primitive(const IntegerMatrix& m);

}  // namespace iet
