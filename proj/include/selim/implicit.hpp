#pragma once

#include <selim/matrix.hpp>
#include <selim/polynomial.hpp>

#include <cstdint>
#include <vector>

namespace selim {

/// Plane curve given by exact polynomial coordinate functions t -> (x(t), y(t)).
struct ParametricPlaneCurve {
    Polynomial x_of_t;
    Polynomial y_of_t;
    std::int64_t deg_x = 0;
    std::int64_t deg_y = 0;

    /// Validates: univariate, nonnegative exponents, not both constant.
    static ParametricPlaneCurve create(Polynomial x_of_t, Polynomial y_of_t);
};

/// Candidate monomials (i, j) ~ X^i Y^j of the implicit equation, kept
/// sorted in increasing graded-lex order without duplicates.
struct SupportSet {
    std::vector<ExponentVector> points;

    static SupportSet of(std::vector<ExponentVector> points); // domain_error when empty
    std::size_t size() const { return points.size(); }
};

/*
 * Conservative support superset: the lattice triangle
 * { (i, j) >= 0 : i*deg_x + j*deg_y <= deg_x*deg_y }, which contains the
 * implicit Newton polygon of a polynomial parameterization of bidegree
 * (deg_x, deg_y); a constant coordinate degenerates to a line support.
 */
SupportSet predict_support(const ParametricPlaneCurve& curve);

/// Rows evaluate the support monomials at curve points; column k holds
/// (x(t))^{i_k} (y(t))^{j_k} for the sample parameters t = 0, 1, -1, 2, -2, ...
struct InterpolationMatrix {
    QMatrix matrix;
    std::vector<Rational> samples;
    SupportSet support;
};

/// count >= |support| rows (domain_error otherwise); sampling is deterministic.
InterpolationMatrix build_interpolation_matrix(const ParametricPlaneCurve& curve,
                                               const SupportSet& support, std::size_t count);

struct ImplicitResult {
    Polynomial equation;           // in X, Y; integer coprime coefficients,
                                   // positive graded-lex leading coefficient
    std::size_t kernel_dimension = 0;
    bool support_superset_warning = false; // kernel dimension stayed above 1
};

/*
 * Kernel of the interpolation matrix by exact elimination. A
 * one-dimensional kernel yields the implicit equation; an empty kernel
 * means the support is too small (support_error); a higher-dimensional
 * kernel after doubling the sample count yields the kernel element of
 * smallest support plus a warning.
 */
ImplicitResult implicit_equation(const ParametricPlaneCurve& curve, const SupportSet& support);

/// Scales to coprime integer coefficients with a positive graded-lex
/// leading coefficient; byte-stable across runs.
Polynomial normalize_primitive(const Polynomial& p);

/*
 * Exact rank-drop membership: appends the row of support monomials
 * evaluated at (px, py) and reports whether the rank stays unchanged,
 * i.e. whether the point satisfies every polynomial in the kernel.
 */
bool membership_test(const InterpolationMatrix& m, const Rational& px, const Rational& py);

} // namespace selim
