#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rdist/error.hpp"
#include "rdist/rational.hpp"

namespace rdist {

/// Dense row-major matrix. Element access is 0-based; vertex numbering at the
/// graph level is 1-based and is translated before reaching this type.
template <typename T = Rational>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error(Errc::dim_mismatch, "ragged initializer list");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const noexcept { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    /// Copy of the `nrows` x `ncols` window whose top-left corner is (r0, c0).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
        if (r0 + nrows > rows_ || c0 + ncols > cols_)
            throw Error(Errc::dim_mismatch, "block window exceeds matrix bounds");
        Matrix out(nrows, ncols);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix& operator+=(const Matrix& other) {
        require_same_shape(other, "addition");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& other) {
        require_same_shape(other, "subtraction");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
        return *this;
    }

    Matrix& operator*=(const T& scalar) {
        for (auto& x : data_) x *= scalar;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::dim_mismatch, "product of " + a.shape() + " and " + b.shape());
        Matrix out(a.rows_, b.cols_);
        // Laplacian-derived operands are mostly zeros; skipping them dominates the cost.
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj != 0) out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& other, const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw Error(Errc::dim_mismatch, std::string(what) + " of " + shape() + " and " + other.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T = Rational>
Matrix<T> identity(std::size_t n) {
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
}

/// The all-ones column vector (n x 1).
template <typename T = Rational>
Matrix<T> ones_vector(std::size_t n) {
    return Matrix<T>(n, 1, T(1));
}

/// The all-ones square matrix J (n x n).
template <typename T = Rational>
Matrix<T> all_ones(std::size_t n) {
    return Matrix<T>(n, n, T(1));
}

template <typename T>
Matrix<T> diagonal(const std::vector<T>& entries) {
    Matrix<T> out(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
    return out;
}

/// Block (i, j) of the result is a(i, j) * b.
template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    }
    return out;
}

/// Row sums as a column vector.
template <typename T>
Matrix<T> row_sums(const Matrix<T>& m) {
    Matrix<T> out(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, 0) += m(r, c);
    return out;
}

template <typename T>
T trace(const Matrix<T>& m) {
    T sum(0);
    for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) sum += m(i, i);
    return sum;
}

}  // namespace rdist
