#include <selim/bounds.hpp>

#include <selim/error.hpp>
#include <selim/series.hpp>

#include <bit>
#include <string>
#include <utility>

namespace selim {

namespace {

std::vector<std::string> block_variable_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t j = 1; j <= count; ++j)
        names.push_back("x" + std::to_string(j));
    return names;
}

} // namespace

BlockStructure::BlockStructure(std::vector<std::int64_t> block_sizes) : sizes(std::move(block_sizes)) {
    if (sizes.empty())
        throw domain_error("block structure needs at least one block");
    for (std::int64_t n : sizes)
        if (n < 1)
            throw domain_error("block sizes must be positive");
}

std::int64_t BlockStructure::total() const {
    std::int64_t n = 0;
    for (std::int64_t s : sizes)
        n += s;
    return n;
}

DegreeMatrix::DegreeMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0)
        throw dimension_error("degree matrix must be nonempty");
    if (entries_.size() != rows_ * cols_)
        throw dimension_error("degree matrix entry count does not match rows*cols");
    for (std::int64_t d : entries_)
        if (d < 0)
            throw domain_error("degrees must be nonnegative");
}

Integer mbezout_product(const DegreeMatrix& degrees, const BlockStructure& blocks) {
    const std::size_t S = blocks.block_count();
    const auto N = static_cast<std::size_t>(blocks.total());
    if (degrees.cols() != S)
        throw dimension_error("degree matrix has " + std::to_string(degrees.cols()) +
                              " columns, expected one per block (" + std::to_string(S) + ")");
    if (degrees.rows() != N)
        throw dimension_error("degree matrix has " + std::to_string(degrees.rows()) +
                              " rows, expected one per equation (" + std::to_string(N) + ")");

    const std::vector<std::string> vars = block_variable_names(S);
    const ExponentVector cap(blocks.sizes.begin(), blocks.sizes.end());

    TruncatedSeries acc = TruncatedSeries::one(vars, cap);
    for (std::size_t i = 0; i < N; ++i) {
        Polynomial form(vars);
        for (std::size_t j = 0; j < S; ++j) {
            if (degrees.at(i, j) == 0)
                continue;
            ExponentVector e(S, 0);
            e[j] = 1;
            form.add_term(e, Rational(static_cast<long>(degrees.at(i, j))));
        }
        acc = series_mul(acc, TruncatedSeries::from_polynomial(form, cap));
    }
    return to_integer(acc.coeff(cap));
}

Polynomial det_identity_minus_va(const DegreeMatrix& block_degrees) {
    const std::size_t S = block_degrees.rows();
    if (block_degrees.cols() != S)
        throw dimension_error("per-block degree matrix must be square");
    const std::vector<std::string> vars = block_variable_names(S);

    // Row j of I - VA is delta_jk - x_j a_jk, so the determinant is at most
    // linear in each x_j. Laplace expansion down the rows with a bitmask of
    // used columns keeps the cost at 2^S polynomial additions.
    std::vector<Polynomial> table(std::size_t(1) << S, Polynomial(vars));
    table[0] = Polynomial::constant(vars, Rational(1));
    std::vector<Polynomial> entry_cache(S * S, Polynomial(vars));
    for (std::size_t j = 0; j < S; ++j)
        for (std::size_t k = 0; k < S; ++k) {
            Polynomial e(vars);
            if (j == k)
                e = e + Polynomial::constant(vars, Rational(1));
            if (block_degrees.at(j, k) != 0) {
                ExponentVector mono(S, 0);
                mono[j] = 1;
                e.add_term(mono, Rational(-static_cast<long>(block_degrees.at(j, k))));
            }
            entry_cache[j * S + k] = std::move(e);
        }

    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        Polynomial acc(vars);
        // cofactor sign (-1)^{row + position of k within mask}
        int sign = row % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < S; ++k) {
            if (!(mask & (std::size_t(1) << k)))
                continue;
            const Polynomial& entry = entry_cache[row * S + k];
            if (!entry.is_zero()) {
                const Polynomial piece = entry * table[mask ^ (std::size_t(1) << k)];
                acc = sign > 0 ? acc + piece : acc - piece;
            }
            sign = -sign;
        }
        table[mask] = std::move(acc);
    }
    return table.back();
}

Integer mbezout_generating_function(const DegreeMatrix& block_degrees, const BlockStructure& blocks) {
    const std::size_t S = blocks.block_count();
    if (block_degrees.rows() != S || block_degrees.cols() != S)
        throw dimension_error("per-block degree matrix must be S x S with one row per block");

    const Polynomial det = det_identity_minus_va(block_degrees);
    const ExponentVector cap(blocks.sizes.begin(), blocks.sizes.end());
    const TruncatedSeries series = series_reciprocal(det, cap);
    return to_integer(series.coeff(cap));
}

Integer tmne_bound(std::int64_t players) {
    if (players < 1)
        throw domain_error("player count must be positive");
    // the reciprocal over the squarefree box costs 3^S coefficient updates
    if (players > 16)
        throw resource_error("totally mixed Nash bound limited to 16 players");
    const auto S = static_cast<std::size_t>(players);
    const std::vector<std::string> vars = block_variable_names(S);

    // 1 - sigma_2 - 2 sigma_3 - ... - (S-1) sigma_S over the squarefree box
    Polynomial denom(vars);
    for (const ExponentVector& e : lattice_box(ExponentVector(S, 1))) {
        const std::int64_t degree = exp_total_degree(e);
        if (degree == 0)
            denom.add_term(e, Rational(1));
        else if (degree >= 2)
            denom.add_term(e, Rational(-static_cast<long>(degree - 1)));
    }

    const ExponentVector cap(S, 1);
    const TruncatedSeries series = series_reciprocal(denom, cap);
    return to_integer(series.coeff(cap));
}

DegreeMatrix expand_block_rows(const DegreeMatrix& block_degrees, const BlockStructure& blocks) {
    const std::size_t S = blocks.block_count();
    if (block_degrees.rows() != S || block_degrees.cols() != S)
        throw dimension_error("row expansion needs an S x S per-block matrix");
    std::vector<std::int64_t> entries;
    entries.reserve(static_cast<std::size_t>(blocks.total()) * S);
    for (std::size_t j = 0; j < S; ++j)
        for (std::int64_t copy = 0; copy < blocks.sizes[j]; ++copy)
            for (std::size_t k = 0; k < S; ++k)
                entries.push_back(block_degrees.at(j, k));
    return DegreeMatrix(static_cast<std::size_t>(blocks.total()), S, std::move(entries));
}

QMatrix expand_columns(const DegreeMatrix& degrees, const BlockStructure& blocks) {
    const std::size_t S = blocks.block_count();
    const auto N = static_cast<std::size_t>(blocks.total());
    if (degrees.cols() != S)
        throw dimension_error("column expansion needs one column per block");
    if (degrees.rows() != N)
        throw dimension_error("column expansion needs one row per equation");
    QMatrix out(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < S; ++j)
            for (std::int64_t copy = 0; copy < blocks.sizes[j]; ++copy)
                out.at(i, col++) = Rational(static_cast<long>(degrees.at(i, j)));
    }
    return out;
}

SimplexBlockSystem::SimplexBlockSystem(BlockStructure blocks_in, DegreeMatrix scale_in,
                                       std::vector<Rational> volumes_in)
    : blocks(std::move(blocks_in)), scale(std::move(scale_in)), block_volumes(std::move(volumes_in)) {
    if (scale.rows() != static_cast<std::size_t>(blocks.total()) || scale.cols() != blocks.block_count())
        throw dimension_error("scale matrix must be N x S");
    if (block_volumes.size() != blocks.block_count())
        throw dimension_error("one block volume per block required");
    for (const Rational& v : block_volumes)
        if (v <= 0)
            throw domain_error("block volumes must be positive");
}

SimplexBlockSystem SimplexBlockSystem::with_unit_simplices(BlockStructure blocks, DegreeMatrix scale) {
    std::vector<Rational> volumes;
    volumes.reserve(blocks.block_count());
    for (std::int64_t n : blocks.sizes) {
        Rational v(1);
        v /= Rational(factorial(static_cast<std::uint64_t>(n)));
        volumes.push_back(v);
    }
    return SimplexBlockSystem(std::move(blocks), std::move(scale), std::move(volumes));
}

Rational mixed_volume_permanent(const SimplexBlockSystem& sys) {
    const QMatrix expanded = expand_columns(sys.scale, sys.blocks);
    Rational result = permanent_ryser(expanded);
    for (const Rational& v : sys.block_volumes)
        result *= v;
    return result;
}

} // namespace selim
