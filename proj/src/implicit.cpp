#include <selim/implicit.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <utility>

namespace selim {

namespace {

const std::vector<std::string> kImplicitVars{"X", "Y"};

// t = 0, 1, -1, 2, -2, ...
Rational sample_parameter(std::size_t k) {
    const auto half = static_cast<long>((k + 1) / 2);
    return Rational(k % 2 == 1 ? half : -half);
}

std::vector<Rational> monomial_row(const SupportSet& support, const Rational& px,
                                   const Rational& py) {
    std::vector<Rational> row;
    row.reserve(support.size());
    for (const ExponentVector& e : support.points)
        row.push_back(rational_pow(px, e[0]) * rational_pow(py, e[1]));
    return row;
}

} // namespace

ParametricPlaneCurve ParametricPlaneCurve::create(Polynomial x_of_t, Polynomial y_of_t) {
    for (const Polynomial* p : {&x_of_t, &y_of_t}) {
        if (p->nvars() != 1)
            throw dimension_error("coordinate functions must be univariate");
        if (p->has_negative_exponents())
            throw domain_error("coordinate functions must be polynomial");
    }
    if (x_of_t.vars() != y_of_t.vars())
        throw dimension_error("coordinate functions over different parameters");
    ParametricPlaneCurve c{std::move(x_of_t), std::move(y_of_t), 0, 0};
    c.deg_x = c.x_of_t.total_degree();
    c.deg_y = c.y_of_t.total_degree();
    if (c.deg_x == 0 && c.deg_y == 0)
        throw domain_error("both coordinate functions are constant");
    return c;
}

SupportSet SupportSet::of(std::vector<ExponentVector> pts) {
    if (pts.empty())
        throw domain_error("empty support set");
    for (const ExponentVector& e : pts) {
        if (e.size() != 2)
            throw dimension_error("support points must be two-dimensional");
        if (e[0] < 0 || e[1] < 0)
            throw domain_error("support points must be nonnegative");
    }
    std::sort(pts.begin(), pts.end(), graded_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return SupportSet{std::move(pts)};
}

SupportSet predict_support(const ParametricPlaneCurve& curve) {
    std::vector<ExponentVector> pts;
    if (curve.deg_x == 0) {
        pts = {{0, 0}, {1, 0}}; // vertical line X = const
    } else if (curve.deg_y == 0) {
        pts = {{0, 0}, {0, 1}}; // horizontal line Y = const
    } else {
        const std::int64_t bound = curve.deg_x * curve.deg_y;
        for (std::int64_t i = 0; i * curve.deg_x <= bound; ++i)
            for (std::int64_t j = 0; i * curve.deg_x + j * curve.deg_y <= bound; ++j)
                pts.push_back({i, j});
    }
    return SupportSet::of(std::move(pts));
}

InterpolationMatrix build_interpolation_matrix(const ParametricPlaneCurve& curve,
                                               const SupportSet& support, std::size_t count) {
    if (count < support.size())
        throw domain_error("need at least as many samples as support monomials");
    InterpolationMatrix out{QMatrix(count, support.size()), {}, support};
    out.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const Rational t = sample_parameter(k);
        out.samples.push_back(t);
        const Rational px = curve.x_of_t.eval({t});
        const Rational py = curve.y_of_t.eval({t});
        const std::vector<Rational> row = monomial_row(support, px, py);
        for (std::size_t j = 0; j < row.size(); ++j)
            out.matrix.at(k, j) = row[j];
    }
    return out;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Integer lcm(1);
    for (const auto& [e, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(c.get_mpq_t()));
    Polynomial scaled = p * Rational(lcm);
    Integer gcd(0);
    for (const auto& [e, c] : scaled.terms())
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), mpq_numref(c.get_mpq_t()));
    if (gcd > 1)
        scaled = scaled * (Rational(1) / Rational(gcd));
    if (scaled.coeff(scaled.leading_exponents()) < 0)
        scaled = -scaled;
    return scaled;
}

namespace {

Polynomial kernel_vector_to_polynomial(const SupportSet& support, const std::vector<Rational>& v) {
    Polynomial p(kImplicitVars);
    for (std::size_t k = 0; k < support.size(); ++k)
        p.add_term(support.points[k], v[k]);
    return normalize_primitive(p);
}

} // namespace

ImplicitResult implicit_equation(const ParametricPlaneCurve& curve, const SupportSet& support) {
    std::size_t count = support.size() + 2;
    std::vector<std::vector<Rational>> kernel =
        kernel_basis(build_interpolation_matrix(curve, support, count).matrix);

    if (kernel.size() > 1 && 2 * support.size() > count) {
        count = 2 * support.size();
        kernel = kernel_basis(build_interpolation_matrix(curve, support, count).matrix);
    }

    if (kernel.empty())
        throw support_error("support set does not contain the implicit equation's support");

    ImplicitResult out;
    out.kernel_dimension = kernel.size();
    if (kernel.size() == 1) {
        out.equation = kernel_vector_to_polynomial(support, kernel.front());
        return out;
    }

    // strict support superset or a non-reduced image: report the kernel
    // element of smallest support (the canonical basis makes ties stable)
    out.support_superset_warning = true;
    const auto nonzeros = [](const std::vector<Rational>& v) {
        return static_cast<std::size_t>(
            std::count_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; }));
    };
    std::size_t best = 0;
    for (std::size_t k = 1; k < kernel.size(); ++k)
        if (nonzeros(kernel[k]) < nonzeros(kernel[best]))
            best = k;
    out.equation = kernel_vector_to_polynomial(support, kernel[best]);
    return out;
}

bool membership_test(const InterpolationMatrix& m, const Rational& px, const Rational& py) {
    if (m.matrix.cols() != m.support.size())
        throw dimension_error("interpolation matrix does not match its support");
    const std::size_t base_rank = rank(m.matrix);
    const QMatrix extended = m.matrix.with_appended_row(monomial_row(m.support, px, py));
    return rank(extended) == base_rank;
}

} // namespace selim
