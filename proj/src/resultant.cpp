#include <selim/resultant.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace selim {

UnivariatePair UnivariatePair::create(Polynomial f, Polynomial g) {
    for (const Polynomial* p : {&f, &g}) {
        if (p->nvars() != 1)
            throw dimension_error("resultant pair must be univariate");
        if (p->is_zero())
            throw domain_error("resultant of the zero polynomial");
        if (p->has_negative_exponents())
            throw domain_error("resultant pair must have nonnegative exponents");
    }
    if (f.vars() != g.vars())
        throw dimension_error("resultant pair over different variables");
    UnivariatePair pair{std::move(f), std::move(g), 0, 0};
    pair.deg_f = pair.f.total_degree();
    pair.deg_g = pair.g.total_degree();
    if (pair.deg_f < 1 || pair.deg_g < 1)
        throw domain_error("resultant pair requires degrees >= 1");
    return pair;
}

QMatrix sylvester_matrix(const UnivariatePair& pair) {
    const auto df = static_cast<std::size_t>(pair.deg_f);
    const auto dg = static_cast<std::size_t>(pair.deg_g);
    const std::size_t n = df + dg;

    // coefficient rows, highest degree first
    const auto coeff_row = [](const Polynomial& p, std::size_t degree) {
        std::vector<Rational> row(degree + 1);
        for (std::size_t k = 0; k <= degree; ++k)
            row[k] = p.coeff({static_cast<std::int64_t>(degree - k)});
        return row;
    };
    const std::vector<Rational> fc = coeff_row(pair.f, df);
    const std::vector<Rational> gc = coeff_row(pair.g, dg);

    QMatrix m(n, n);
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k <= df; ++k)
            m.at(r, r + k) = fc[k];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t k = 0; k <= dg; ++k)
            m.at(dg + r, r + k) = gc[k];
    return m;
}

Rational sylvester_resultant(const UnivariatePair& pair) {
    return det_fraction_free(sylvester_matrix(pair));
}

namespace {

std::string fresh_variable_name(const std::vector<std::string>& taken) {
    std::string name = "h";
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name += "_";
    return name;
}

Polynomial homogenize(const Polynomial& p, const std::vector<std::string>& new_vars) {
    const std::int64_t degree = p.total_degree();
    Polynomial out(new_vars);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector he = e;
        he.push_back(degree - exp_total_degree(e));
        out.add_term(he, c);
    }
    return out;
}

// monomials of total degree d in nvars variables, decreasing lex order
std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, std::int64_t d) {
    std::vector<ExponentVector> out;
    ExponentVector current(nvars, 0);
    const auto fill = [&](auto&& self, std::size_t var, std::int64_t remaining) -> void {
        if (var + 1 == nvars) {
            current[var] = remaining;
            out.push_back(current);
            return;
        }
        for (std::int64_t k = remaining; k >= 0; --k) {
            current[var] = k;
            self(self, var + 1, remaining - k);
        }
    };
    fill(fill, 0, d);
    return out;
}

} // namespace

DenseHomogeneousSystem DenseHomogeneousSystem::create(std::vector<Polynomial> polys) {
    if (polys.size() < 2)
        throw dimension_error("a resultant system needs at least two polynomials");
    const std::size_t n = polys.size() - 1;
    for (const Polynomial& p : polys) {
        if (p.vars() != polys.front().vars())
            throw dimension_error("system polynomials over different variable lists");
        if (p.has_negative_exponents())
            throw domain_error("system polynomials must have nonnegative exponents");
        if (p.is_zero())
            throw domain_error("system contains the zero polynomial");
    }

    if (polys.front().nvars() == n) {
        // affine input: homogenize with a fresh last variable
        std::vector<std::string> new_vars = polys.front().vars();
        new_vars.push_back(fresh_variable_name(new_vars));
        for (Polynomial& p : polys)
            p = homogenize(p, new_vars);
    } else if (polys.front().nvars() != n + 1) {
        throw dimension_error("expected n+1 polynomials in n (affine) or n+1 (homogeneous) variables");
    }

    DenseHomogeneousSystem sys;
    sys.affine_dim = n;
    sys.degrees.reserve(polys.size());
    for (const Polynomial& p : polys) {
        if (!p.is_homogeneous())
            throw domain_error("system polynomials must be homogeneous");
        const std::int64_t d = p.total_degree();
        if (d < 1)
            throw domain_error("system degrees must be >= 1");
        sys.degrees.push_back(d);
    }
    sys.polys = std::move(polys);
    return sys;
}

MacaulayMatrix macaulay_matrix(const DenseHomogeneousSystem& sys) {
    const std::size_t nvars = sys.affine_dim + 1;
    std::int64_t critical = 1;
    for (std::int64_t d : sys.degrees)
        critical += d - 1;

    MacaulayMatrix out;
    out.critical_degree = critical;
    out.monomials = monomials_of_degree(nvars, critical);

    std::map<ExponentVector, std::size_t> column_of;
    for (std::size_t k = 0; k < out.monomials.size(); ++k)
        column_of.emplace(out.monomials[k], k);

    const std::size_t dim = out.monomials.size();
    out.matrix = QMatrix(dim, dim);
    out.row_block.resize(dim);

    for (std::size_t r = 0; r < dim; ++r) {
        const ExponentVector& alpha = out.monomials[r];
        std::size_t block = nvars;
        std::size_t divisor_count = 0;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (alpha[i] >= sys.degrees[i]) {
                ++divisor_count;
                if (block == nvars)
                    block = i;
            }
        }
        if (block == nvars)
            throw invariant_error("degree-D monomial admits no divisor x_i^{d_i}");
        out.row_block[r] = block;

        ExponentVector shift = alpha;
        shift[block] -= sys.degrees[block];
        for (const auto& [e, c] : sys.polys[block].terms())
            out.matrix.at(r, column_of.at(exp_add(shift, e))) += c;

        if (divisor_count >= 2) {
            out.reduced_rows.push_back(r);
            out.reduced_cols.push_back(r);
        }
    }
    return out;
}

Rational macaulay_resultant(const DenseHomogeneousSystem& sys) {
    const MacaulayMatrix m = macaulay_matrix(sys);
    const Rational det_m = det_fraction_free(m.matrix);
    if (m.reduced_rows.empty())
        return det_m;
    const Rational det_minor = det_fraction_free(m.matrix.submatrix(m.reduced_rows, m.reduced_cols));
    if (det_minor == 0)
        throw degenerate_error(
            "Macaulay minor M' is singular for these coefficients; "
            "the rational formula det M / det M' does not apply");
    return det_m / det_minor;
}

} // namespace selim
