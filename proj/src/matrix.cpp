#include <selim/matrix.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace selim {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw dimension_error("matrix entry count does not match rows*cols");
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

void QMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void QMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

QMatrix QMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const {
    QMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(i, j) = at(row_idx[i], col_idx[j]);
    return out;
}

QMatrix QMatrix::with_appended_row(const std::vector<Rational>& row) const {
    if (row.size() != cols_)
        throw dimension_error("appended row has wrong length");
    QMatrix out(rows_ + 1, cols_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), row.begin(), row.end());
    return out;
}

Rational det_fraction_free(QMatrix m) {
    if (!m.is_square())
        throw dimension_error("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);

    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first nonzero entry of the trailing submatrix, scanning row-major
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n)
            return Rational(0);
        if (pi != k) {
            m.swap_rows(pi, k);
            sign = -sign;
        }
        if (pj != k) {
            m.swap_cols(pj, k);
            sign = -sign;
        }

        const Rational pivot = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = pivot;
    }
    Rational det = m.at(n - 1, n - 1);
    if (sign < 0)
        det = -det;
    return det;
}

Rational permanent_ryser(const QMatrix& m, std::size_t size_limit) {
    if (!m.is_square())
        throw dimension_error("permanent requires a square matrix");
    const std::size_t n = m.rows();
    if (n > size_limit)
        throw resource_error("permanent dimension " + std::to_string(n) +
                             " exceeds the limit " + std::to_string(size_limit));
    if (n == 0)
        return Rational(1);

    std::vector<Rational> row_sums(n, Rational(0));
    Rational total(0);
    const std::uint64_t count = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(k));
        const std::uint64_t gray = k ^ (k >> 1);
        const bool added = (gray >> j) & 1u;
        for (std::size_t i = 0; i < n; ++i) {
            if (added)
                row_sums[i] += m.at(i, j);
            else
                row_sums[i] -= m.at(i, j);
        }
        Rational prod(1);
        for (std::size_t i = 0; i < n && prod != 0; ++i)
            prod *= row_sums[i];
        // (-1)^{n - |S|}
        if ((n - std::popcount(gray)) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

Rational permanent_bruteforce(const QMatrix& m) {
    if (!m.is_square())
        throw dimension_error("permanent requires a square matrix");
    const std::size_t n = m.rows();
    if (n > 8)
        throw resource_error("brute-force permanent limited to n <= 8");
    if (n == 0)
        return Rational(1);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational total(0);
    do {
        Rational prod(1);
        for (std::size_t i = 0; i < n && prod != 0; ++i)
            prod *= m.at(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == m.rows())
            continue;
        m.swap_rows(pivot, row);
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

std::size_t rank(QMatrix m) {
    return rref(m).size();
}

std::vector<std::vector<Rational>> kernel_basis(QMatrix m) {
    const std::size_t ncols = m.cols();
    const std::vector<std::size_t> pivot_cols = rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace selim
