#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dehnforge/matrix.hpp"
#include "dehnforge/rational.hpp"

namespace dehnforge {

using IntMatrix = Matrix<Integer>;

/// Result of a Smith normal form computation: U * A * V = S with U, V
/// unimodular and S diagonal, invariant factors non-negative and each
/// dividing the next.
struct SmithResult {
    std::vector<Integer> invariant_factors;  // nonzero diagonal of S
    IntMatrix U, V;                          // transforms (square, unimodular)
    std::size_t rank() const { return invariant_factors.size(); }
    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (const auto& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

namespace detail {

inline Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}
inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace detail

/// Smith normal form by pivoting on the entry of least absolute value and
/// alternately clearing its row and column.  Exact big-integer arithmetic.
inline SmithResult smith_normal_form(IntMatrix a) {
    using namespace detail;
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithResult res;
    res.U = IntMatrix::identity(rows);
    res.V = IntMatrix::identity(cols);

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate pivot: nonzero entry of least |.| in the remaining block
        std::size_t pr = rows, pc = cols;
        Integer best(0);
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (a(r, c) == 0) continue;
                Integer v = int_abs(a(r, c));
                if (pr == rows || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;  // remaining block is zero
        if (pr != t) {
            swap_rows(a, pr, t);
            swap_rows(res.U, pr, t);
        }
        if (pc != t) {
            swap_cols(a, pc, t);
            swap_cols(res.V, pc, t);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                Integer q = a(r, t) / a(t, t);
                add_row(a, r, t, -q);
                add_row(res.U, r, t, -q);
                if (a(r, t) != 0) {  // remainder smaller than pivot: promote it
                    swap_rows(a, r, t);
                    swap_rows(res.U, r, t);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                Integer q = a(t, c) / a(t, t);
                add_col(a, c, t, -q);
                add_col(res.V, c, t, -q);
                if (a(t, c) != 0) {
                    swap_cols(a, c, t);
                    swap_cols(res.V, c, t);
                    clean = false;
                }
            }
        }

        // pivot must divide every entry of the remaining block
        bool divides = true;
        for (std::size_t r = t + 1; r < rows && divides; ++r)
            for (std::size_t c = t + 1; c < cols && divides; ++c)
                if (a(r, c) % a(t, t) != 0) {
                    add_row(a, t, r, Integer(1));
                    add_row(res.U, t, r, Integer(1));
                    divides = false;
                }
        if (!divides) continue;  // redo the elimination at the same t

        if (a(t, t) < 0) {
            negate_row(a, t);
            negate_row(res.U, t);
        }
        ++t;
    }

    for (std::size_t i = 0; i < t; ++i) res.invariant_factors.push_back(a(i, i));
    return res;
}

inline std::size_t integer_rank(const IntMatrix& a) {
    return smith_normal_form(a).rank();
}

/// Basis for the integer kernel of a (columns x of a*x = 0), as columns.
inline IntMatrix integer_kernel(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    std::size_t r = s.rank();
    IntMatrix k(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - r) = s.V(i, j);
    return k;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer integer_determinant(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return Integer(1);
    Integer sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (a(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p == n) return Integer(0);
            detail::swap_rows(a, p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Solve a*x = b over the integers when a is square and invertible over Q;
/// throws if the solution is not integral.
inline IntMatrix integer_solve_exact(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.rows();
    if (n != a.cols() || b.rows() != n) throw std::invalid_argument("integer_solve_exact shape");
    Matrix<Rational> aug(n, n + b.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = Rational(a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = Rational(b(r, c));
    }
    // forward elimination with partial pivoting by first nonzero
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t r = k; r < n; ++r)
            if (aug(r, k) != 0) {
                p = r;
                break;
            }
        if (p == n) throw std::domain_error("integer_solve_exact: singular matrix");
        if (p != k)
            for (std::size_t c = 0; c < aug.cols(); ++c) std::swap(aug(p, c), aug(k, c));
        Rational inv = 1 / aug(k, k);
        for (std::size_t c = k; c < aug.cols(); ++c) aug(k, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || aug(r, k) == 0) continue;
            Rational f = aug(r, k);
            for (std::size_t c = k; c < aug.cols(); ++c) aug(r, c) -= f * aug(k, c);
        }
    }
    IntMatrix x(n, b.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            const Rational& v = aug(r, n + c);
            if (!is_integral(v)) throw std::domain_error("integer_solve_exact: non-integral solution");
            x(r, c) = rat_num(v);
        }
    return x;
}

}  // namespace dehnforge
