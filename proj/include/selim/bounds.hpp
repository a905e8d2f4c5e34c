#pragma once

#include <selim/matrix.hpp>
#include <selim/polynomial.hpp>

#include <cstdint>
#include <vector>

namespace selim {

/// Partition of the N affine variables into S blocks of sizes n_1..n_S.
struct BlockStructure {
    std::vector<std::int64_t> sizes;

    explicit BlockStructure(std::vector<std::int64_t> block_sizes);

    std::size_t block_count() const { return sizes.size(); }
    std::int64_t total() const;
};

/// Nonnegative integer degree data. Rows are either individual equations
/// (N x S) or equation blocks (S x S, one row per block).
class DegreeMatrix {
public:
    DegreeMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> entries_;
};

/*
 * Multihomogeneous root bound for a per-equation degree matrix: the
 * coefficient of x_1^{n_1}...x_S^{n_S} in the product over equations of
 * (d_i1 x_1 + ... + d_iS x_S). The product is accumulated as a truncated
 * series with cap (n_1,...,n_S), never expanded in full.
 */
Integer mbezout_product(const DegreeMatrix& degrees, const BlockStructure& blocks);

/*
 * Same bound for the square semi-mixed case (one degree row per equation
 * block), read off the reciprocal series of det(I - VA) with V the diagonal
 * of the block variables: the coefficient of x_1^{n_1}...x_S^{n_S}.
 */
Integer mbezout_generating_function(const DegreeMatrix& block_degrees, const BlockStructure& blocks);

/// det(I - VA) as a polynomial in x_1..x_S; exposed for cross-checks.
Polynomial det_identity_minus_va(const DegreeMatrix& block_degrees);

/*
 * Root bound of the S-player two-strategy totally mixed Nash system: the
 * coefficient of x_1...x_S in 1/(1 - sigma_2 - 2 sigma_3 - ... - (S-1) sigma_S),
 * sigma_j the j-th elementary symmetric polynomial. Equals the number of
 * derangements of S.
 */
Integer tmne_bound(std::int64_t players);

/// Block row j repeated n_j times, yielding the per-equation N x S form.
DegreeMatrix expand_block_rows(const DegreeMatrix& block_degrees, const BlockStructure& blocks);

/// Column j repeated n_j times, yielding the N x N permanent input.
QMatrix expand_columns(const DegreeMatrix& degrees, const BlockStructure& blocks);

/*
 * System whose i-th Newton polytope is the direct product over blocks of
 * a_ij-scaled copies of a fixed n_j-dimensional polytope with Euclidean
 * volume block_volumes[j].
 */
struct SimplexBlockSystem {
    BlockStructure blocks;
    DegreeMatrix scale;                  // N x S
    std::vector<Rational> block_volumes; // vol > 0, one per block

    SimplexBlockSystem(BlockStructure blocks, DegreeMatrix scale,
                       std::vector<Rational> block_volumes);

    /// Unit-simplex blocks: vol = 1/n_j!.
    static SimplexBlockSystem with_unit_simplices(BlockStructure blocks, DegreeMatrix scale);
};

/// Mixed volume perm(A) * prod_j vol_j with A the column-expanded N x N matrix.
Rational mixed_volume_permanent(const SimplexBlockSystem& sys);

} // namespace selim
