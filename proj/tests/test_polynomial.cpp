#include <doctest.h>

#include <selim/error.hpp>
#include <selim/polynomial.hpp>

#include "helpers.hpp"

#include <limits>

using namespace selim;

namespace {

const std::vector<std::string> xy{"x", "y"};

} // namespace

TEST_CASE("term bookkeeping drops zeros and checks lengths") {
    Polynomial p(xy);
    p.add_term({1, 0}, Rational(2));
    p.add_term({1, 0}, Rational(-2));
    CHECK(p.is_zero());
    p.add_term({0, 1}, Rational(0));
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term({1}, Rational(1)), dimension_error);
}

TEST_CASE("evaluation") {
    Polynomial p(xy); // x^2 + y
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(1));
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(7));

    CHECK(Polynomial::constant(xy, Rational(5)).eval({Rational(17), Rational(-4)}) == Rational(5));

    Polynomial laurent(xy); // x^-1 y
    laurent.add_term({-1, 1}, Rational(1));
    CHECK(laurent.eval({Rational(2), Rational(6)}) == Rational(3));
    CHECK_THROWS_AS(laurent.eval({Rational(0), Rational(6)}), domain_error);
}

TEST_CASE("ring operations agree with evaluation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a(xy), b(xy);
        for (int t = 0; t < 4; ++t) {
            a.add_term({test::rand_int(rng, 0, 3), test::rand_int(rng, 0, 3)},
                       test::rand_rational_int(rng, -5, 5));
            b.add_term({test::rand_int(rng, 0, 3), test::rand_int(rng, 0, 3)},
                       test::rand_rational_int(rng, -5, 5));
        }
        const std::vector<Rational> pt{test::rand_rational_int(rng, -4, 4),
                                       test::rand_rational_int(rng, -4, 4)};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a - b).eval(pt) == a.eval(pt) - b.eval(pt));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("printing is deterministic graded-lex") {
    Polynomial p(xy);
    p.add_term({0, 0}, Rational(1));
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(-1));
    CHECK(p.str() == "x^2 - y + 1");

    Polynomial q(xy);
    q.add_term({1, 1}, Rational(-3, 2));
    q.add_term({0, 0}, Rational(-2));
    CHECK(q.str() == "-3/2*x*y - 2");

    CHECK(Polynomial(xy).str() == "0");
}

TEST_CASE("derivative and homogeneity") {
    Polynomial p(xy); // x^2 y + 3 x
    p.add_term({2, 1}, Rational(1));
    p.add_term({1, 0}, Rational(3));
    const Polynomial dx = p.derivative(0);
    Polynomial expected(xy);
    expected.add_term({1, 1}, Rational(2));
    expected.add_term({0, 0}, Rational(3));
    CHECK(dx == expected);

    CHECK_FALSE(p.is_homogeneous());
    Polynomial h(xy);
    h.add_term({2, 0}, Rational(1));
    h.add_term({1, 1}, Rational(-4));
    CHECK(h.is_homogeneous());
}

TEST_CASE("composition substitutes polynomials for variables") {
    Polynomial p(xy); // Y - X^2
    p.add_term({0, 1}, Rational(1));
    p.add_term({2, 0}, Rational(-1));

    const std::vector<std::string> tvar{"t"};
    Polynomial xt(tvar), yt(tvar); // (t, t^2)
    xt.add_term({1}, Rational(1));
    yt.add_term({2}, Rational(1));
    CHECK(compose(p, {xt, yt}).is_zero());
}

TEST_CASE("exponent overflow is a checked error") {
    const ExponentVector big{std::numeric_limits<std::int64_t>::max()};
    CHECK_THROWS_AS(exp_add(big, {1}), domain_error);
    Polynomial p(std::vector<std::string>{"x"});
    p.add_term(big, Rational(1));
    CHECK_THROWS_AS(p * p, domain_error);
}
