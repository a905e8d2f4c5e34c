#pragma once

#include <selim/bounds.hpp>
#include <selim/matrix.hpp>
#include <selim/polynomial.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace selim {

/// Payoff data of an S-player game: one S-dimensional tensor per player,
/// indexed by pure strategy profiles (row-major, extents = strategy_counts).
struct PayoffTensor {
    std::vector<std::int64_t> strategy_counts;
    std::vector<std::vector<Rational>> payoffs; // [player][flat profile index]

    static PayoffTensor create(std::vector<std::int64_t> strategy_counts,
                               std::vector<std::vector<Rational>> payoffs);

    std::size_t players() const { return strategy_counts.size(); }
    std::size_t profile_index(std::span<const std::int64_t> profile) const;
    const Rational& payoff(std::size_t player, std::span<const std::int64_t> profile) const;
};

/*
 * The totally-mixed-equilibrium system of a game: for every player j and
 * every strategy i >= 2, the payoff difference between strategy i and
 * strategy 1 as a multilinear polynomial in the other players' probability
 * variables, with each block's last probability eliminated through
 * p_{j,m_j} = 1 - sum of the earlier ones. Variables are named p{j}_{i}
 * and grouped into blocks of size m_j - 1.
 */
struct TMNESystem {
    std::vector<std::string> variables;
    BlockStructure blocks;
    std::vector<Polynomial> equations;
    std::vector<std::size_t> equation_player; // owner of each equation
};

/// Builds the equilibrium system; every m_j must be at least 2.
TMNESystem build_tmne_system(const PayoffTensor& payoffs);

/*
 * The three bilinear equations of a 3-player, 2-strategy game on
 * P^1 x P^1 x P^1, each omitting its own player's coordinates
 * (x1:x0), (y1:y0), (z1:z0):
 *
 *   F1 = a[0] y1 z1 + a[1] y1 z0 + a[2] y0 z1 + a[3] y0 z0
 *   F2 = b[0] x1 z1 + b[1] x1 z0 + b[2] x0 z1 + b[3] x0 z0
 *   F3 = c[0] x1 y1 + c[1] x1 y0 + c[2] x0 y1 + c[3] x0 y0
 *
 * Coefficients are listed on the four bilinear monomials in row-major
 * order (11, 10, 01, 00). No quadruple may be all zero.
 */
struct BilinearTriple {
    std::array<Rational, 4> a;
    std::array<Rational, 4> b;
    std::array<Rational, 4> c;

    static BilinearTriple create(std::array<Rational, 4> a, std::array<Rational, 4> b,
                                 std::array<Rational, 4> c);
};

/// Conversion for the 2x2x2 case (dimension_error otherwise).
BilinearTriple to_bilinear_triple(const TMNESystem& sys);

/*
 * The 6x6 Sylvester-type discriminant matrix of the bilinear triple. With
 * A = [[a0,a1],[a2,a3]] (rows y1,y0; columns z1,z0), B = [[b0,b1],[b2,b3]]
 * (rows x1,x0; columns z1,z0), C = [[c0,c1],[c2,c3]] (rows x1,x0; columns
 * y1,y0), the matrix is the symmetric block layout
 *
 *       [ 0    C    B ]
 *       [ C^T  0    A ]
 *       [ B^T  A^T  0 ]
 *
 * i.e. the Hessian of F1 + F2 + F3 viewed as one quadratic form on the six
 * homogeneous coordinates (x1,x0,y1,y0,z1,z0). Row k states that the
 * gradient of that quadratic form with respect to coordinate k vanishes.
 * Its determinant vanishes exactly when the system has a multiple root
 * with nonzero coordinates, and equals -1 times the discriminant of the
 * eliminated quadratic (see quadratic_discriminant_oracle); the constant
 * is pinned by a regression test.
 */
QMatrix discriminant_matrix(const BilinearTriple& t);

/// Determinant of the matrix above; exact integer for integer input.
Rational discriminant_2x2x2(const BilinearTriple& t);

/// Binary quadratic q(x1,x0) = a2 x1^2 + a1 x1 x0 + a0 x0^2.
struct QuadraticEliminant {
    Rational a2;
    Rational a1;
    Rational a0;

    Rational discriminant() const { return a1 * a1 - 4 * a2 * a0; }
    bool is_zero() const { return a2 == 0 && a1 == 0 && a0 == 0; }
};

/*
 * Eliminates the z block from F1 and F2 (a 2x2 resultant in z1, z0), then
 * the y block against F3, leaving a quadratic in (x1:x0). This is the
 * fixed elimination order; any other valid order yields a proportional
 * eliminant.
 */
QuadraticEliminant eliminate_to_x(const BilinearTriple& t);

enum class OracleStatus {
    ok,
    leading_coefficient_zero, // a root escaped to x0 = 0; inconclusive
    identically_zero,         // positive-dimensional or degenerate elimination
};

struct OracleResult {
    OracleStatus status = OracleStatus::ok;
    Rational discriminant;        // of the eliminant, when status == ok
    QuadraticEliminant eliminant;
};

/// Independent discriminant route via the eliminated quadratic.
OracleResult quadratic_discriminant_oracle(const BilinearTriple& t);

/// Point of P^1 stored as (num : den) with den = 1 whenever it is nonzero,
/// and (1 : 0) otherwise.
struct ProjectiveRatio {
    Rational num;
    Rational den;

    static ProjectiveRatio affine(const Rational& value) { return {value, Rational(1)}; }
    static ProjectiveRatio infinity() { return {Rational(1), Rational(0)}; }
    /// Canonical form of (u : v); domain_error when both are zero.
    static ProjectiveRatio of(const Rational& u, const Rational& v);

    bool operator==(const ProjectiveRatio&) const = default;
};

enum class RootPosition {
    interior,              // all six coordinates nonzero
    coordinate_hyperplane, // some coordinate vanishes
    indeterminate_fiber,   // back-substitution broke down: a whole fiber solves
};

struct RootTriple {
    ProjectiveRatio x;
    ProjectiveRatio y;
    ProjectiveRatio z;
    int multiplicity = 1;
    RootPosition position = RootPosition::interior;
};

enum class RootClass {
    rational_roots,  // all roots rational; listed in `roots`
    irrational_pair, // two conjugate real roots of the eliminant
    complex_pair,    // two conjugate complex roots of the eliminant
};

struct SolveResult {
    RootClass kind = RootClass::rational_roots;
    std::vector<RootTriple> roots;
    QuadraticEliminant eliminant;
};

/*
 * Exact solver: eliminates to the x quadratic, solves over Q when the
 * quadratic discriminant is a perfect square, otherwise reports the exact
 * quadratic as an irrational or complex conjugate pair. Rational roots are
 * back-substituted to the y and z ratios. Throws degenerate_error when the
 * eliminant vanishes identically (positive-dimensional solution set).
 */
SolveResult solve_2x2x2(const BilinearTriple& t);

/*
 * Deterministic generator of instances with a multiple root: picks a
 * random rational root with nonzero coordinates, solves the linear
 * conditions on the coefficients that place a double root of the
 * eliminant there, and clears denominators. The result has integer
 * coefficients, satisfies all three equations at the root, and has a
 * singular Jacobian there.
 */
BilinearTriple construct_double_root(std::uint64_t seed);

/// Determinant of the affine Jacobian of (F1,F2,F3) at (x,y,z) in the
/// charts x0 = y0 = z0 = 1.
Rational jacobian_det(const BilinearTriple& t, const Rational& x, const Rational& y,
                      const Rational& z);

} // namespace selim
