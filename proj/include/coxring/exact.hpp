#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coxring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional sign, no decimals) into a normalized rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    Matrix transposed() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t kernel_dim(const RatMatrix& m);

/// Basis of {v : m v = 0}; one vector per free column of the rref, with a 1 in that column.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... and di >= 0.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant (fraction-free elimination); square input required.
Integer determinant(const IntMatrix& m);

/// C(n, k); 0 when k < 0, k > n or n < 0. Throws std::overflow_error past 64 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace coxring
