#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polynet/algebra/prime_field.hpp"
#include "polynet/algebra/rational_field.hpp"
#include "polynet/errors.hpp"

namespace polynet::algebra {

// Dense row-major matrix over an exact field context F. Value type; all
// entries live in the field carried by the matrix.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Elem* row(std::size_t i) { return a_.data() + i * cols_; }
    const Elem* row(std::size_t i) const { return a_.data() + i * cols_; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix multiply(const Matrix& other) const {
        check_same_field(other);
        if (cols_ != other.rows_) throw ShapeMismatchError("matrix multiply: inner dimensions differ");
        Matrix out(field_, rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out.at(i, j) = field_.add(out.at(i, j), field_.mul(aik, other.at(k, j)));
            }
        }
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

    void check_same_field(const Matrix& other) const {
        if (!(field_ == other.field_)) throw FieldMismatchError("matrices over different fields");
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

// Rank over F_p by ordinary Gaussian elimination with row pivoting per
// column. Mutates a copy; one fused multiply-accumulate + Barrett reduce
// per inner entry.
inline std::size_t rank(const Matrix<PrimeField>& m) {
    Matrix<PrimeField> a = m;
    const PrimeField& f = a.field();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        a.swap_rows(piv, r);
        const std::uint64_t inv_pivot = f.inv(a.at(r, col));
        const std::uint64_t* prow = a.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t* irow = a.row(i);
            if (irow[col] == 0) continue;
            const std::uint64_t factor = f.mul(irow[col], inv_pivot);
            for (std::size_t j = col; j < cols; ++j) {
                // irow[j] - factor*prow[j]; stays below 2^63 before reduction
                irow[j] = f.reduce(irow[j] + factor * f.neg(prow[j]));
            }
        }
        ++r;
    }
    return r;
}

// Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
// Entries at step k are k+1 minors of the input, which keeps growth
// polynomial for integer input instead of the exponential blowup plain
// elimination can produce.
inline std::size_t rank(const Matrix<RationalField>& m) {
    Matrix<RationalField> a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = rows < cols ? rows : cols;
    mpq_class prev(1);
    std::size_t k = 0;
    for (; k < steps; ++k) {
        // full pivot search: any nonzero in the remaining submatrix
        std::size_t pi = k, pj = k;
        bool found = false;
        for (std::size_t i = k; i < rows && !found; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (sgn(a.at(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        a.swap_rows(pi, k);
        if (pj != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, k), a.at(i, pj));
        const mpq_class pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const mpq_class aik = a.at(i, k);
            for (std::size_t j = k + 1; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * pivot - aik * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = pivot;
    }
    return k;
}

// Exact solve M X = B for square invertible M, by Gauss-Jordan with row
// pivoting. Throws SingularMatrixError when M is not invertible.
template <class F>
Matrix<F> solve(const Matrix<F>& m, const Matrix<F>& b) {
    m.check_same_field(b);
    if (m.rows() != m.cols()) throw ShapeMismatchError("solve: matrix must be square");
    if (b.rows() != m.rows()) throw ShapeMismatchError("solve: right-hand side row count");
    const F& f = m.field();
    const std::size_t n = m.rows(), w = b.cols();
    Matrix<F> a = m;
    Matrix<F> x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && f.is_zero(a.at(piv, col))) ++piv;
        if (piv == n) throw SingularMatrixError("solve: singular matrix");
        a.swap_rows(piv, col);
        x.swap_rows(piv, col);
        const auto inv_pivot = f.inv(a.at(col, col));
        for (std::size_t j = col; j < n; ++j) a.at(col, j) = f.mul(a.at(col, j), inv_pivot);
        for (std::size_t j = 0; j < w; ++j) x.at(col, j) = f.mul(x.at(col, j), inv_pivot);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || f.is_zero(a.at(i, col))) continue;
            const auto factor = a.at(i, col);
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
            for (std::size_t j = 0; j < w; ++j)
                x.at(i, j) = f.sub(x.at(i, j), f.mul(factor, x.at(col, j)));
        }
    }
    return x;
}

} // namespace polynet::algebra
