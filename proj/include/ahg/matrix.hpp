#ifndef AHG_MATRIX_HPP
#define AHG_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ahg/ratfunc.hpp"

namespace ahg {

// Dense matrix over a field F (F = Rat or RatFunc here).  Column labels are
// kept by callers alongside the column index space.
template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<F>> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<F>(c, F(0))) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.a[i][i] = F(1);
        return m;
    }

    F& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const F& at(std::size_t i, std::size_t j) const { return a[i][j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Sparse row of univariate-polynomial entries, sorted by column index.
struct PolyRow {
    std::vector<std::pair<int, UniPoly>> t;
};

struct PolyRref {
    std::vector<PolyRow> rows;    // nonzero RREF rows as primitive polynomial rows, sorted by pivot column
    std::vector<int> pivot_cols;  // pivot column of rows[i] (ascending)
};

// Divides the row by the gcd of its entries and by its rational content, and
// fixes the sign so the leading entry has a positive leading coefficient.
void normalize_poly_row(PolyRow& r);

// Fraction-free (division-postponed) reduced row echelon form over Q(k):
// entries stay polynomial through elimination and each combined row is
// renormalized to its primitive representative; the division by the pivot is
// postponed until entries are read off as rational functions.  The pivot for
// each column is the surviving row of smallest original index.
PolyRref rref_poly_rows(std::vector<PolyRow> rows, int ncols);

// Reduced row echelon form.  Returns the pivot column indices; the matrix is
// replaced by the nonzero rows of its RREF.  Elimination walks columns left to
// right and picks the first row with a nonzero entry in the pivot column.
std::vector<std::size_t> rref(Matrix<Rat>& m);
std::vector<std::size_t> rref(Matrix<RatFunc>& m);

namespace detail {

template <class F>
std::vector<std::size_t> rref_field(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols && prow < m.rows; ++c) {
        std::size_t sel = prow;
        while (sel < m.rows && m.a[sel][c].is_zero()) ++sel;
        if (sel == m.rows) continue;
        std::swap(m.a[sel], m.a[prow]);
        F inv = m.a[prow][c].inverse();
        for (std::size_t j = c; j < m.cols; ++j) m.a[prow][j] = m.a[prow][j] * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == prow || m.a[i][c].is_zero()) continue;
            F f = m.a[i][c];
            for (std::size_t j = c; j < m.cols; ++j)
                m.a[i][j] = m.a[i][j] - f * m.a[prow][j];
        }
        pivots.push_back(c);
        ++prow;
    }
    m.a.resize(pivots.size());
    m.rows = pivots.size();
    return pivots;
}

}  // namespace detail

// Inverse of a square matrix; throws SingularMatrixError when rank deficient.
template <class F>
Matrix<F> invert(const Matrix<F>& m) {
    if (m.rows != m.cols) throw SingularMatrixError("invert: matrix not square");
    std::size_t n = m.rows;
    Matrix<F> w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.a[i][j] = m.a[i][j];
        w.a[i][n + i] = F(1);
    }
    auto pivots = detail::rref_field(w);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw SingularMatrixError();
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.a[i][j] = w.a[i][n + j];
    return out;
}

template <class F>
Matrix<F> operator*(const Matrix<F>& x, const Matrix<F>& y) {
    if (x.cols != y.rows) throw Error("matrix product shape mismatch");
    Matrix<F> r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return r;
}

template <class F>
std::vector<F> operator*(const Matrix<F>& x, const std::vector<F>& v) {
    if (x.cols != v.size()) throw Error("matrix-vector shape mismatch");
    std::vector<F> r(x.rows, F(0));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (!x.a[i][j].is_zero()) r[i] += x.a[i][j] * v[j];
    return r;
}

}  // namespace ahg

#endif
