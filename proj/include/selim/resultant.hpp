#pragma once

#include <selim/matrix.hpp>
#include <selim/polynomial.hpp>

#include <cstdint>
#include <vector>

namespace selim {

/// Two univariate polynomials of positive degree.
struct UnivariatePair {
    Polynomial f;
    Polynomial g;
    std::int64_t deg_f = 0;
    std::int64_t deg_g = 0;

    /// Validates: one shared variable, nonnegative exponents, both degrees >= 1.
    static UnivariatePair create(Polynomial f, Polynomial g);
};

/*
 * Classical Sylvester matrix of size (deg f + deg g): deg g shifted copies
 * of f's coefficient row followed by deg f shifted copies of g's, highest
 * degree first. Its determinant is Res(f,g) = lc(f)^{deg g} prod_i g(r_i)
 * over the roots r_i of f.
 */
QMatrix sylvester_matrix(const UnivariatePair& pair);

/// Determinant of the Sylvester matrix.
Rational sylvester_resultant(const UnivariatePair& pair);

/// n+1 homogeneous polynomials of positive degree in n+1 variables.
struct DenseHomogeneousSystem {
    std::size_t affine_dim = 0;            // n
    std::vector<Polynomial> polys;         // n+1 forms in n+1 variables
    std::vector<std::int64_t> degrees;     // d_i >= 1

    /*
     * Accepts either n+1 homogeneous polynomials in n+1 variables or n+1
     * affine polynomials in n variables; the latter are homogenized to
     * their total degree with a fresh variable appended last.
     */
    static DenseHomogeneousSystem create(std::vector<Polynomial> polys);
};

/*
 * Macaulay's resultant matrix at the critical degree D = 1 + sum(d_i - 1).
 * Rows and columns are labeled by the monomials of degree D in n+1
 * variables, in decreasing lexicographic order. The row of x^a holds the
 * coefficients of (x^a / x_i^{d_i}) * f_i, where i is the least index with
 * x_i^{d_i} | x^a (such an i always exists at the critical degree).
 *
 * reduced_rows/reduced_cols select the minor M' on the monomials divisible
 * by x_j^{d_j} for at least two distinct j; those rows never belong to the
 * last polynomial's block. The resultant is det M / det M'.
 *
 * Worked example, n = 2, degrees (1,1,2), D = 2, monomial order
 * x0^2 > x0*x1 > x0*x2 > x1^2 > x1*x2 > x2^2:
 *   x0^2, x0*x1, x0*x2 -> rows of f0 (multiplied by x0, x1, x2),
 *   x1^2, x1*x2        -> rows of f1 (multiplied by x1, x2),
 *   x2^2               -> row of f2.
 * Only x0*x1 is divisible by both x0^{1} and x1^{1}, so M' is the 1x1 minor
 * at (x0*x1, x0*x1), holding the coefficient of x0 in f0.
 */
struct MacaulayMatrix {
    QMatrix matrix;
    std::vector<ExponentVector> monomials;  // shared row/column labels
    std::vector<std::size_t> row_block;     // equation index of each row
    std::vector<std::size_t> reduced_rows;  // index set of M'
    std::vector<std::size_t> reduced_cols;  // same set, column side
    std::int64_t critical_degree = 0;
};

MacaulayMatrix macaulay_matrix(const DenseHomogeneousSystem& sys);

/// det M / det M' (an empty minor has determinant 1). Throws
/// degenerate_error when det M' = 0: the rational formula fails for these
/// coefficients and no fallback is attempted.
Rational macaulay_resultant(const DenseHomogeneousSystem& sys);

} // namespace selim
