#include "coxring/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace coxring {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            s.push_back(c);
        }
    }
    auto valid_integer = [](const std::string& part, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
            start = 1;
        }
        if (start >= part.size()) {
            return false;
        }
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    Integer n(num), d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

template <typename T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix data does not match its shape");
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
    }
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

template <typename T>
Matrix<T> Matrix<T>::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (v[j] != 0) {
                out[i] += a(i, j) * v[j];
            }
        }
    }
    return out;
}

template class Matrix<Rational>;
template class Matrix<Integer>;
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template std::vector<Rational> operator*(const RatMatrix&, const std::vector<Rational>&);
template std::vector<Integer> operator*(const IntMatrix&, const std::vector<Integer>&);

RrefResult rref(const RatMatrix& m) {
    RrefResult out{m, {}};
    RatMatrix& a = out.matrix;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        a.swap_rows(row, pivot);
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) {
            a(row, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) {
                continue;
            }
            Rational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (a(row, j) != 0) {
                    a(i, j) -= factor * a(row, j);
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::size_t kernel_dim(const RatMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            v[r.pivots[i]] = -r.matrix(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Integer& d : diagonal()) {
        if (d != 0) {
            ++r;
        }
    }
    return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
        out.push_back(D(i, i));
    }
    return out;
}

namespace {

// Minimal nonzero |entry| in the lower-right block starting at (t, t); ties go to the
// lowest row-major index.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) {
                continue;
            }
            Integer v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(source, j) != 0) {
            m(target, j) += q * m(source, j);
        }
    }
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, source) != 0) {
            m(i, target) += q * m(i, source);
        }
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = s.D;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(d, t, pi, pj)) {
            break;
        }
        while (true) {
            find_pivot(d, t, pi, pj);
            d.swap_rows(t, pi);
            s.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            s.V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) {
                    continue;
                }
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                add_row_multiple(d, i, t, -q);
                add_row_multiple(s.U, i, t, -q);
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) {
                    continue;
                }
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                add_col_multiple(d, j, t, -q);
                add_col_multiple(s.V, j, t, -q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean) {
                continue;
            }
            // Divisibility chain: fold any entry the pivot does not divide into row t.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i) {
                for (std::size_t j = t + 1; j < d.cols(); ++j) {
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        add_row_multiple(d, t, i, 1);
                        add_row_multiple(s.U, t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                break;
            }
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j) {
                d(t, j) = -d(t, j);
            }
            for (std::size_t j = 0; j < s.U.cols(); ++j) {
                s.U(t, j) = -s.U(t, j);
            }
        }
    }
    return s;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!result.fits_slong_p()) {
        throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return result.get_si();
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Rational(m(i, j));
        }
    }
    return out;
}

}  // namespace coxring
