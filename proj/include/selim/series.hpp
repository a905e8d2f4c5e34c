#pragma once

#include <selim/polynomial.hpp>

#include <vector>

namespace selim {

/*
 * Multivariate power series truncated at a per-variable degree cap.
 * Coefficients are stored sparsely; every stored exponent vector is
 * componentwise within [0, cap].
 */
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<std::string> vars, ExponentVector cap);

    static TruncatedSeries one(std::vector<std::string> vars, ExponentVector cap);
    /// Keeps the in-box terms of p; negative exponents are a domain_error.
    static TruncatedSeries from_polynomial(const Polynomial& p, ExponentVector cap);

    const ExponentVector& cap() const { return cap_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }

    Rational coeff(const ExponentVector& exps) const;
    void set_coeff(const ExponentVector& exps, const Rational& value);
    bool in_box(const ExponentVector& exps) const;

    Polynomial to_polynomial() const;
    bool is_one() const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    std::vector<std::string> vars_;
    ExponentVector cap_;
    std::map<ExponentVector, Rational> terms_;
};

/// Truncated product; terms exceeding the cap in any coordinate are dropped.
/// Caps and variable lists must agree (dimension_error).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/*
 * Reciprocal of a polynomial with nonzero constant term, modulo terms
 * exceeding the cap: coefficients are filled in increasing total degree via
 *   q[e] = -( sum_{0 < d <= e} p[d] q[e-d] ) / p[0].
 * Throws domain_error when the constant term vanishes (not invertible) or
 * when p has negative exponents.
 */
TruncatedSeries series_reciprocal(const Polynomial& p, const ExponentVector& cap);

/// All lattice points of [0,cap], sorted by graded-lex (resource-guarded).
std::vector<ExponentVector> lattice_box(const ExponentVector& cap);

} // namespace selim
