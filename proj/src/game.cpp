#include <selim/game.hpp>

#include <selim/error.hpp>

#include <numeric>
#include <random>
#include <string>
#include <utility>

namespace selim {

PayoffTensor PayoffTensor::create(std::vector<std::int64_t> strategy_counts,
                                  std::vector<std::vector<Rational>> payoffs) {
    if (strategy_counts.empty())
        throw domain_error("a game needs at least one player");
    std::size_t cells = 1;
    for (std::int64_t m : strategy_counts) {
        if (m < 1)
            throw domain_error("strategy counts must be positive");
        cells *= static_cast<std::size_t>(m);
    }
    if (payoffs.size() != strategy_counts.size())
        throw dimension_error("one payoff tensor per player required");
    for (const auto& tensor : payoffs)
        if (tensor.size() != cells)
            throw dimension_error("payoff tensor extent mismatch");
    PayoffTensor t;
    t.strategy_counts = std::move(strategy_counts);
    t.payoffs = std::move(payoffs);
    return t;
}

std::size_t PayoffTensor::profile_index(std::span<const std::int64_t> profile) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < strategy_counts.size(); ++i)
        index = index * static_cast<std::size_t>(strategy_counts[i]) +
                static_cast<std::size_t>(profile[i]);
    return index;
}

const Rational& PayoffTensor::payoff(std::size_t player, std::span<const std::int64_t> profile) const {
    return payoffs[player][profile_index(profile)];
}

TMNESystem build_tmne_system(const PayoffTensor& payoffs) {
    const std::size_t S = payoffs.players();
    for (std::int64_t m : payoffs.strategy_counts)
        if (m < 2)
            throw domain_error("every player needs at least two strategies");

    std::vector<std::string> vars;
    std::vector<std::int64_t> block_sizes;
    std::vector<std::size_t> block_offset(S);
    for (std::size_t j = 0; j < S; ++j) {
        block_offset[j] = vars.size();
        block_sizes.push_back(payoffs.strategy_counts[j] - 1);
        for (std::int64_t i = 1; i < payoffs.strategy_counts[j]; ++i)
            vars.push_back("p" + std::to_string(j + 1) + "_" + std::to_string(i));
    }

    // probability of strategy i of player j as a polynomial: the own
    // variable for i < m_j, and 1 - sum of the block for the last strategy
    const auto probability = [&](std::size_t j, std::int64_t i) {
        Polynomial p(vars);
        if (i + 1 < payoffs.strategy_counts[j]) {
            ExponentVector e(vars.size(), 0);
            e[block_offset[j] + static_cast<std::size_t>(i)] = 1;
            p.add_term(e, Rational(1));
        } else {
            p.add_term(ExponentVector(vars.size(), 0), Rational(1));
            for (std::int64_t k = 0; k + 1 < payoffs.strategy_counts[j]; ++k) {
                ExponentVector e(vars.size(), 0);
                e[block_offset[j] + static_cast<std::size_t>(k)] = 1;
                p.add_term(e, Rational(-1));
            }
        }
        return p;
    };

    TMNESystem sys{vars, BlockStructure(block_sizes), {}, {}};
    for (std::size_t j = 0; j < S; ++j) {
        for (std::int64_t strat = 1; strat < payoffs.strategy_counts[j]; ++strat) {
            Polynomial equation(vars);
            // odometer over the other players' pure profiles
            std::vector<std::int64_t> profile(S, 0);
            while (true) {
                profile[j] = strat;
                const Rational high = payoffs.payoff(j, profile);
                profile[j] = 0;
                const Rational diff = high - payoffs.payoff(j, profile);
                if (diff != 0) {
                    Polynomial term = Polynomial::constant(vars, diff);
                    for (std::size_t l = 0; l < S; ++l)
                        if (l != j)
                            term = term * probability(l, profile[l]);
                    equation = equation + term;
                }
                std::size_t l = 0;
                for (; l < S; ++l) {
                    if (l == j)
                        continue;
                    if (profile[l] + 1 < payoffs.strategy_counts[l]) {
                        ++profile[l];
                        break;
                    }
                    profile[l] = 0;
                }
                if (l == S)
                    break;
            }
            sys.equations.push_back(std::move(equation));
            sys.equation_player.push_back(j);
        }
    }
    return sys;
}

BilinearTriple BilinearTriple::create(std::array<Rational, 4> a, std::array<Rational, 4> b,
                                      std::array<Rational, 4> c) {
    for (const auto* quad : {&a, &b, &c}) {
        bool all_zero = true;
        for (const Rational& v : *quad)
            if (v != 0)
                all_zero = false;
        if (all_zero)
            throw domain_error("an equation of the bilinear triple is identically zero");
    }
    return BilinearTriple{std::move(a), std::move(b), std::move(c)};
}

BilinearTriple to_bilinear_triple(const TMNESystem& sys) {
    if (sys.blocks.block_count() != 3 || sys.blocks.total() != 3 || sys.equations.size() != 3)
        throw dimension_error("bilinear triple requires a 3-player, 2-strategy system");

    // affine equation of player j is bilinear in the other two variables;
    // homogenizing multiplies by the two foreign denominator coordinates,
    // so the quadruple is (coeff uv, coeff u, coeff v, constant)
    const auto quad_of = [&](std::size_t player, std::size_t u, std::size_t v) {
        const Polynomial& eq = sys.equations[player];
        if (eq.degree_in(player) > 0)
            throw invariant_error("equilibrium equation involves its own player");
        const auto e = [&](bool on_u, bool on_v) {
            ExponentVector exps(3, 0);
            exps[u] = on_u ? 1 : 0;
            exps[v] = on_v ? 1 : 0;
            return exps;
        };
        return std::array<Rational, 4>{eq.coeff(e(true, true)), eq.coeff(e(true, false)),
                                       eq.coeff(e(false, true)), eq.coeff(e(false, false))};
    };
    return BilinearTriple::create(quad_of(0, 1, 2), quad_of(1, 0, 2), quad_of(2, 0, 1));
}

QMatrix discriminant_matrix(const BilinearTriple& t) {
    const auto& a = t.a;
    const auto& b = t.b;
    const auto& c = t.c;
    const Rational o(0);
    return QMatrix(6, 6,
                   {o, o, c[0], c[1], b[0], b[1],    //
                    o, o, c[2], c[3], b[2], b[3],    //
                    c[0], c[2], o, o, a[0], a[1],    //
                    c[1], c[3], o, o, a[2], a[3],    //
                    b[0], b[2], a[0], a[2], o, o,    //
                    b[1], b[3], a[1], a[3], o, o});
}

Rational discriminant_2x2x2(const BilinearTriple& t) {
    return det_fraction_free(discriminant_matrix(t));
}

QuadraticEliminant eliminate_to_x(const BilinearTriple& t) {
    const auto& a = t.a;
    const auto& b = t.b;
    const auto& c = t.c;
    // z eliminated from F1, F2: G(x,y) = (a0 y1 + a2 y0)(b1 x1 + b3 x0)
    //                                  - (a1 y1 + a3 y0)(b0 x1 + b2 x0)
    const Rational p1 = a[0] * b[1] - a[1] * b[0]; // G_y1 on x1
    const Rational p0 = a[0] * b[3] - a[1] * b[2]; // G_y1 on x0
    const Rational q1 = a[2] * b[1] - a[3] * b[0]; // G_y0 on x1
    const Rational q0 = a[2] * b[3] - a[3] * b[2]; // G_y0 on x0
    // y eliminated from G, F3 with F3_y1 = c0 x1 + c2 x0, F3_y0 = c1 x1 + c3 x0
    QuadraticEliminant e;
    e.a2 = p1 * c[1] - q1 * c[0];
    e.a1 = p1 * c[3] + p0 * c[1] - q1 * c[2] - q0 * c[0];
    e.a0 = p0 * c[3] - q0 * c[2];
    return e;
}

OracleResult quadratic_discriminant_oracle(const BilinearTriple& t) {
    OracleResult out;
    out.eliminant = eliminate_to_x(t);
    if (out.eliminant.is_zero()) {
        out.status = OracleStatus::identically_zero;
        return out;
    }
    out.discriminant = out.eliminant.discriminant();
    out.status = out.eliminant.a2 == 0 ? OracleStatus::leading_coefficient_zero : OracleStatus::ok;
    return out;
}

ProjectiveRatio ProjectiveRatio::of(const Rational& u, const Rational& v) {
    if (v != 0)
        return {u / v, Rational(1)};
    if (u == 0)
        throw domain_error("projective point (0 : 0)");
    return infinity();
}

namespace {

Rational eval_bilinear(const std::array<Rational, 4>& q, const ProjectiveRatio& u,
                       const ProjectiveRatio& v) {
    return q[0] * u.num * v.num + q[1] * u.num * v.den + q[2] * u.den * v.num +
           q[3] * u.den * v.den;
}

RootTriple back_substitute(const BilinearTriple& t, const ProjectiveRatio& x, int multiplicity) {
    RootTriple root;
    root.x = x;
    root.multiplicity = multiplicity;

    const Rational y_num = -(t.c[1] * x.num + t.c[3] * x.den);
    const Rational y_den = t.c[0] * x.num + t.c[2] * x.den;
    const Rational z_num = -(t.b[1] * x.num + t.b[3] * x.den);
    const Rational z_den = t.b[0] * x.num + t.b[2] * x.den;

    if ((y_num == 0 && y_den == 0) || (z_num == 0 && z_den == 0)) {
        // F3(x, .) or F2(x, .) vanishes identically: a whole fiber solves
        root.position = RootPosition::indeterminate_fiber;
        root.y = (y_num == 0 && y_den == 0) ? ProjectiveRatio::infinity()
                                            : ProjectiveRatio::of(y_num, y_den);
        root.z = (z_num == 0 && z_den == 0) ? ProjectiveRatio::infinity()
                                            : ProjectiveRatio::of(z_num, z_den);
        return root;
    }
    root.y = ProjectiveRatio::of(y_num, y_den);
    root.z = ProjectiveRatio::of(z_num, z_den);

    const bool on_boundary = x.num == 0 || x.den == 0 || root.y.num == 0 || root.y.den == 0 ||
                             root.z.num == 0 || root.z.den == 0;
    root.position = on_boundary ? RootPosition::coordinate_hyperplane : RootPosition::interior;

    if (eval_bilinear(t.a, root.y, root.z) != 0 || eval_bilinear(t.b, root.x, root.z) != 0 ||
        eval_bilinear(t.c, root.x, root.y) != 0)
        throw invariant_error("eliminant root failed back-substitution");
    return root;
}

} // namespace

SolveResult solve_2x2x2(const BilinearTriple& t) {
    SolveResult out;
    out.eliminant = eliminate_to_x(t);
    const QuadraticEliminant& e = out.eliminant;
    if (e.is_zero())
        throw degenerate_error("eliminant vanishes identically: positive-dimensional solution set");

    if (e.a2 != 0) {
        const Rational disc = e.discriminant();
        if (disc == 0) {
            const Rational u = -e.a1 / (2 * e.a2);
            out.roots.push_back(back_substitute(t, ProjectiveRatio::affine(u), 2));
        } else if (disc > 0 && is_perfect_square(disc)) {
            const Rational root_disc = exact_sqrt(disc);
            const Rational u_plus = (-e.a1 + root_disc) / (2 * e.a2);
            const Rational u_minus = (-e.a1 - root_disc) / (2 * e.a2);
            out.roots.push_back(back_substitute(t, ProjectiveRatio::affine(u_plus), 1));
            out.roots.push_back(back_substitute(t, ProjectiveRatio::affine(u_minus), 1));
        } else {
            out.kind = disc > 0 ? RootClass::irrational_pair : RootClass::complex_pair;
        }
    } else if (e.a1 != 0) {
        // a1 x1 x0 + a0 x0^2: one root at x0 = 0, one at (x1 : x0) = (-a0 : a1)
        out.roots.push_back(back_substitute(t, ProjectiveRatio::infinity(), 1));
        out.roots.push_back(back_substitute(t, ProjectiveRatio::affine(-e.a0 / e.a1), 1));
    } else {
        // a0 x0^2: double root at infinity in the x factor
        out.roots.push_back(back_substitute(t, ProjectiveRatio::infinity(), 2));
    }
    return out;
}

Rational jacobian_det(const BilinearTriple& t, const Rational& x, const Rational& y,
                      const Rational& z) {
    const Rational o(0);
    const QMatrix j(3, 3,
                    {o, t.a[0] * z + t.a[1], t.a[0] * y + t.a[2],    //
                     t.b[0] * z + t.b[1], o, t.b[0] * x + t.b[2],    //
                     t.c[0] * y + t.c[1], t.c[0] * x + t.c[2], o});
    return det_fraction_free(j);
}

namespace {

// lcm of denominators, then gcd of numerators: scales a quadruple to
// coprime integers without changing the zero set
void make_primitive(std::array<Rational, 4>& quad) {
    Integer lcm(1);
    for (const Rational& v : quad)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(v.get_mpq_t()));
    Integer gcd(0);
    for (Rational& v : quad) {
        v *= Rational(lcm);
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), mpq_numref(v.get_mpq_t()));
    }
    if (gcd > 1)
        for (Rational& v : quad)
            v /= Rational(gcd);
}

} // namespace

BilinearTriple construct_double_root(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto small_int = [&rng]() { return static_cast<std::int64_t>(rng() % 11) - 5; };
    const auto small_nonzero = [&]() {
        std::int64_t v = 0;
        while (v == 0)
            v = small_int();
        return v;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        const Rational x(static_cast<long>(small_nonzero()));
        const Rational y(static_cast<long>(small_nonzero()));
        const Rational z(static_cast<long>(small_nonzero()));

        // F3(x, y) = 0 with a nonzero y-fiber denominator c0 x + c2
        std::array<Rational, 4> c;
        for (std::size_t k = 0; k < 3; ++k)
            c[k] = Rational(static_cast<long>(small_int()));
        c[3] = -(c[0] * x * y + c[1] * x + c[2] * y);
        if (c[0] * x + c[2] == 0)
            continue;

        // F2(x, z) = 0 with a nonzero z-fiber denominator b0 x + b2
        std::array<Rational, 4> b;
        for (std::size_t k = 0; k < 3; ++k)
            b[k] = Rational(static_cast<long>(small_int()));
        b[3] = -(b[0] * x * z + b[1] * x + b[2] * z);
        if (b[0] * x + b[2] == 0)
            continue;

        // linear conditions on a: F1(y, z) = 0 and d/dx1 of the eliminant
        // vanishes at (x : 1); together they force a double eliminant root
        std::array<Rational, 4> alpha_of, beta_of;
        alpha_of[0] = b[1] * c[1];
        alpha_of[1] = -b[0] * c[1];
        alpha_of[2] = -b[1] * c[0];
        alpha_of[3] = b[0] * c[0];
        beta_of[0] = b[1] * c[3] + b[3] * c[1];
        beta_of[1] = -b[0] * c[3] - b[2] * c[1];
        beta_of[2] = -b[1] * c[2] - b[3] * c[0];
        beta_of[3] = b[0] * c[2] + b[2] * c[0];

        std::array<Rational, 4> value_of{y * z, y, z, Rational(1)};
        std::array<Rational, 4> slope_of;
        for (std::size_t k = 0; k < 4; ++k)
            slope_of[k] = 2 * x * alpha_of[k] + beta_of[k];

        std::array<Rational, 4> a;
        a[2] = Rational(static_cast<long>(small_int()));
        a[3] = Rational(static_cast<long>(small_int()));
        const Rational det = value_of[0] * slope_of[1] - value_of[1] * slope_of[0];
        if (det == 0)
            continue;
        const Rational r0 = -(value_of[2] * a[2] + value_of[3] * a[3]);
        const Rational r1 = -(slope_of[2] * a[2] + slope_of[3] * a[3]);
        a[0] = (r0 * slope_of[1] - value_of[1] * r1) / det;
        a[1] = (value_of[0] * r1 - r0 * slope_of[0]) / det;

        if (a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0)
            continue;
        make_primitive(a);

        BilinearTriple t;
        try {
            t = BilinearTriple::create(a, b, c);
        } catch (const domain_error&) {
            continue;
        }
        const QuadraticEliminant e = eliminate_to_x(t);
        if (e.is_zero() || e.a2 == 0)
            continue;
        if (e.discriminant() != 0)
            continue;
        if (jacobian_det(t, x, y, z) != 0)
            continue;
        const ProjectiveRatio px = ProjectiveRatio::affine(x);
        const ProjectiveRatio py = ProjectiveRatio::affine(y);
        const ProjectiveRatio pz = ProjectiveRatio::affine(z);
        if (eval_bilinear(t.a, py, pz) != 0 || eval_bilinear(t.b, px, pz) != 0 ||
            eval_bilinear(t.c, px, py) != 0)
            continue;
        return t;
    }
    throw invariant_error("double-root construction failed to converge");
}

} // namespace selim
