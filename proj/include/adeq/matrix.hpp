#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "adeq/exact.hpp"

namespace adeq {

// Dense row-major matrix over an exact scalar type (Int or Rat).
template <typename Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (const auto& v : row) data_.push_back(v);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<Scalar> row(int i) const {
        return std::vector<Scalar>(data_.begin() + size_t(i) * cols_,
                                   data_.begin() + size_t(i + 1) * cols_);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik == Scalar(0)) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

// Exact determinant by rational Gaussian elimination.
inline Rat determinant(RatMatrix m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    Rat det(1);
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int k = i; k < n; ++k)
            if (m(k, i) != 0) { pivot = k; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != i) {
            for (int j = 0; j < n; ++j) std::swap(m(i, j), m(pivot, j));
            det = -det;
        }
        det *= m(i, i);
        for (int k = i + 1; k < n; ++k) {
            if (m(k, i) == 0) continue;
            Rat f = m(k, i) / m(i, i);
            for (int j = i; j < n; ++j) m(k, j) -= f * m(i, j);
        }
    }
    return det;
}

// Exact inverse by Gauss-Jordan; throws on singular input.
inline RatMatrix inverse(RatMatrix m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        int pivot = -1;
        for (int k = i; k < n; ++k)
            if (m(k, i) != 0) { pivot = k; break; }
        if (pivot < 0) throw std::invalid_argument("inverse: singular matrix");
        if (pivot != i)
            for (int j = 0; j < n; ++j) {
                std::swap(m(i, j), m(pivot, j));
                std::swap(inv(i, j), inv(pivot, j));
            }
        Rat p = m(i, i);
        for (int j = 0; j < n; ++j) { m(i, j) /= p; inv(i, j) /= p; }
        for (int k = 0; k < n; ++k) {
            if (k == i || m(k, i) == 0) continue;
            Rat f = m(k, i);
            for (int j = 0; j < n; ++j) {
                m(k, j) -= f * m(i, j);
                inv(k, j) -= f * inv(i, j);
            }
        }
    }
    return inv;
}

// Element-wise fractional part: every entry lands in [0, 1).
inline RatMatrix mod1(const RatMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = mod1(m(i, j));
    return out;
}

} // namespace adeq
