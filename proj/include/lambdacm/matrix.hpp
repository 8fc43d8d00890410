#pragma once

// Dense exact matrices: fraction-free (Bareiss) determinant and rank over any
// exact integral domain, a checked int64 fast path, and rank modulo a prime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lambdacm {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i) {
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) {
            throw std::invalid_argument("matrix product: shape mismatch");
        }
        Matrix out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    out(i, j) += x(i, k) * y(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<mpq_class>;
using IntMatrix = Matrix<std::int64_t>;

namespace detail {

/// Fraction-free row echelon reduction in place. Every division is exact:
/// after k pivots, entry (i, j) equals a (k+1)-minor and the divisor is the
/// previous k-minor (Sylvester's identity). Returns the rank; `sign` tracks
/// row swaps.
template <typename T>
std::size_t bareiss_reduce(Matrix<T>& m, int& sign) {
    sign = 1;
    T prev(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(rank, j));
            }
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
            }
            m(i, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

}  // namespace detail

template <typename T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (m.rows() == 0) {
        return T(1);
    }
    int sign = 1;
    if (detail::bareiss_reduce(m, sign) < m.rows()) {
        return T(0);
    }
    T det = m(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? T(-det) : det;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
    int sign = 1;
    return detail::bareiss_reduce(m, sign);
}

/// Bareiss rank in int64 arithmetic; nullopt if any intermediate overflows.
inline std::optional<std::size_t> rank_checked(IntMatrix m) {
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(r, j));
            }
        }
        const std::int64_t p = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const std::int64_t q = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                std::int64_t x = 0;
                std::int64_t y = 0;
                std::int64_t diff = 0;
                if (__builtin_mul_overflow(p, m(i, j), &x) || __builtin_mul_overflow(q, m(r, j), &y) ||
                    __builtin_sub_overflow(x, y, &diff)) {
                    return std::nullopt;
                }
                m(i, j) = diff / prev;
            }
            m(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

/// Exact rank of an integer matrix: int64 Bareiss, falling back to GMP integers.
inline std::size_t exact_rank(const IntMatrix& m) {
    if (auto r = rank_checked(m)) {
        return *r;
    }
    Matrix<mpz_class> big(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            big(i, j) = static_cast<long>(m(i, j));
        }
    }
    return rank(std::move(big));
}

inline constexpr std::uint64_t kRankPrime = 2147483647;  // 2^31 - 1

/// Rank over Z/p. Never exceeds the rational rank, so a vanishing homology
/// group computed with it vanishes over Q as well.
inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p = kRankPrime) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
            a[i * cols + j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }
    }
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        for (b %= p; e != 0; e >>= 1) {
            if (e & 1U) {
                r = r * b % p;
            }
            b = b * b % p;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) {
                std::swap(a[pivot * cols + j], a[r * cols + j]);
            }
        }
        const std::uint64_t inv = power(a[r * cols + c], p - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = a[i * cols + c] * inv % p;
            if (f == 0) {
                continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace lambdacm
