#pragma once

#include <selim/scalar.hpp>

#include <cstddef>
#include <vector>

namespace selim {

/// Dense matrix over exact rationals, row-major storage.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    /// New matrix keeping the given row/column indices, in the given order.
    QMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

    /// Copy with one extra row appended at the bottom.
    QMatrix with_appended_row(const std::vector<Rational>& row) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/*
 * Exact determinant by Bareiss fraction-free elimination.
 *
 * The two-step update a(i,j) <- (a(i,j)*pivot - a(i,k)*a(k,j)) / prev_pivot
 * divides exactly at every step, so integral input stays integral all the
 * way down. Pivoting scans the trailing submatrix row-major and takes the
 * first nonzero entry (deterministic full pivot); no pivot means a zero
 * determinant. Throws dimension_error on non-square input.
 */
Rational det_fraction_free(QMatrix m);

/*
 * Exact permanent by Ryser's inclusion-exclusion over column subsets,
 *
 *   perm(A) = (-1)^n  sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a(i,j),
 *
 * walking subsets in binary-reflected Gray code order so each step updates
 * the n cached row sums by one column. Throws dimension_error on non-square
 * input and resource_error when n exceeds size_limit.
 */
Rational permanent_ryser(const QMatrix& m, std::size_t size_limit = 30);

/// Permanent as a plain sum over all n! permutations; n <= 8.
Rational permanent_bruteforce(const QMatrix& m);

/// Exact rank via Gaussian elimination.
std::size_t rank(QMatrix m);

/*
 * Canonical basis of the right kernel { v : m v = 0 }, read off the reduced
 * row echelon form: one vector per free column, with value 1 in that column.
 * Deterministic for a given matrix.
 */
std::vector<std::vector<Rational>> kernel_basis(QMatrix m);

} // namespace selim
