#pragma once

#include <selim/scalar.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace selim {

/// Laurent exponent vector; one signed entry per ambient variable.
using ExponentVector = std::vector<std::int64_t>;

/// Componentwise sum with overflow checking (domain_error on overflow).
ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b);

std::int64_t exp_total_degree(const ExponentVector& e);

/// Total degree first, ties broken lexicographically.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

/*
 * Sparse multivariate Laurent polynomial with exact rational coefficients.
 * Terms are keyed by exponent vector; zero coefficients are never stored.
 * The term map is ordered, so iteration and printing are deterministic.
 */
class Polynomial {
public:
    Polynomial() = default; // zero polynomial over no variables
    explicit Polynomial(std::vector<std::string> vars);

    static Polynomial constant(std::vector<std::string> vars, Rational value);
    static Polynomial monomial(std::vector<std::string> vars, ExponentVector exps, Rational coeff);
    /// The i-th variable as a polynomial.
    static Polynomial variable(std::vector<std::string> vars, std::size_t index);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given exponent vector; zero if absent.
    Rational coeff(const ExponentVector& exps) const;

    /// Adds coeff * x^exps, dropping the term if the sum cancels.
    void add_term(const ExponentVector& exps, const Rational& coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& scalar) const;
    bool operator==(const Polynomial& other) const = default;

    /// Exact evaluation; negative exponents require nonzero coordinates.
    Rational eval(const std::vector<Rational>& point) const;

    std::int64_t total_degree() const;           // 0 for the zero polynomial
    std::int64_t degree_in(std::size_t var) const;
    std::int64_t min_degree_in(std::size_t var) const;
    bool has_negative_exponents() const;
    /// Every term has the same total degree (vacuously true when zero).
    bool is_homogeneous() const;

    Polynomial derivative(std::size_t var) const;

    /// Leading exponent vector in graded-lex order; domain_error when zero.
    const ExponentVector& leading_exponents() const;

    /// Deterministic rendering, terms in decreasing graded-lex order.
    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<ExponentVector, Rational> terms_;
};

/// Substitutes args[i] for variable i; requires nonnegative exponents and
/// identical variable lists across args.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& args);

Polynomial pow(const Polynomial& p, std::uint64_t exponent);

} // namespace selim
