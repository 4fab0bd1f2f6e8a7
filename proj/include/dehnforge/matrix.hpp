#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dehnforge {

/// Minimal dense matrix over an arbitrary commutative ring.  Entries act on
/// column vectors: (*this)(r, c) is the coefficient of basis vector r in the
/// image of basis vector c.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        return a_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        return a_[r * cols_ + c];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& v = (*this)(i, k);
                if (v == T()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += v * o(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T())) return false;
        return true;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        Matrix<decltype(f(std::declval<T>()))> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

    /// Copy a block of `o` into this matrix with its top-left corner at (r0, c0).
    void place(std::size_t r0, std::size_t c0, const Matrix& o) {
        for (std::size_t r = 0; r < o.rows(); ++r)
            for (std::size_t c = 0; c < o.cols(); ++c) (*this)(r0 + r, c0 + c) = o(r, c);
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t r = 0; r < row_idx.size(); ++r)
            for (std::size_t c = 0; c < col_idx.size(); ++c)
                out(r, c) = (*this)(row_idx[r], col_idx[c]);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

/// Rank over a field by Gaussian elimination.  F needs +, -, *, /, == and a
/// default constructor giving zero.
template <class F>
std::size_t field_rank(Matrix<F> m) {
    std::size_t rank = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!(m(r, c) == F())) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        F inv = F(1) / m(rank, c);
        for (std::size_t j = c; j < cols; ++j) m(rank, j) = m(rank, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m(r, c) == F()) continue;
            F f = m(r, c);
            for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Inverse of a square matrix over a ring, valid when (m - diag) is
/// nilpotent and the diagonal entries are units equal to +-1.  Used for the
/// triangular changes of basis in the randomized complex generators.
template <class T>
Matrix<T> unitriangular_inverse(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("unitriangular_inverse: square input required");
    Matrix<T> d(n, n), nilp(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) d(r, c) = m(r, c);
            else nilp(r, c) = m(r, c);
        }
    // m = d + nilp, m^{-1} = sum_k (-d^{-1} nilp)^k d^{-1}; d^{-1} = d since entries are +-1.
    Matrix<T> dinv = d;
    Matrix<T> term = Matrix<T>::identity(n);
    Matrix<T> acc = Matrix<T>::identity(n);
    Matrix<T> step = -(dinv * nilp);
    for (std::size_t k = 1; k <= n; ++k) {
        term = step * term;
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc * dinv;
}

}  // namespace dehnforge
