#include <doctest.h>

#include <selim/error.hpp>
#include <selim/scalar.hpp>

#include "helpers.hpp"

using namespace selim;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(rational_from_string("3/6") == Rational(1, 2));
    CHECK(rational_from_string("-4/8") == Rational(-1, 2));
    CHECK(rational_from_string("3/-6") == Rational(-1, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(to_string(rational_from_string("10/4")) == "5/2");
    CHECK_THROWS_AS(rational_from_string("abc"), schema_error);
    CHECK_THROWS_AS(rational_from_string("1/0"), schema_error);
    CHECK_THROWS_AS(rational_from_string("1.5"), schema_error);
    CHECK_THROWS_AS(rational_from_string(""), schema_error);
}

TEST_CASE("rational powers") {
    CHECK(rational_pow(Rational(2, 3), 2) == Rational(4, 9));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(0), 0) == Rational(1));
    CHECK(rational_pow(Rational(0), 3) == Rational(0));
    CHECK(rational_pow(Rational(-2), 3) == Rational(-8));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), domain_error);
}

TEST_CASE("perfect squares and exact square roots") {
    CHECK(is_perfect_square(Rational(9, 4)));
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(is_perfect_square(Rational(0)));
    CHECK_FALSE(is_perfect_square(Rational(2)));
    CHECK_FALSE(is_perfect_square(Rational(-9)));
    CHECK_FALSE(is_perfect_square(Rational(9, 8)));
    CHECK_THROWS_AS(exact_sqrt(Rational(2)), domain_error);
}

TEST_CASE("arithmetic chains stay in lowest terms with positive denominator") {
    std::mt19937_64 rng(7);
    Rational acc(1);
    for (int step = 0; step < 400; ++step) {
        const Rational next = make_rational(Integer(static_cast<long>(test::rand_int(rng, -20, 20))),
                                            Integer(static_cast<long>(test::rand_int(rng, 1, 20))));
        switch (step % 4) {
        case 0: acc += next; break;
        case 1: acc -= next; break;
        case 2: acc *= next; break;
        default:
            if (next != 0)
                acc /= next;
        }
        CHECK(mpz_sgn(mpq_denref(acc.get_mpq_t())) > 0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), mpq_numref(acc.get_mpq_t()), mpq_denref(acc.get_mpq_t()));
        CHECK(g == 1);
    }
}

TEST_CASE("integer conversion guards") {
    CHECK(to_integer(rational_from_string("12/4")) == 3);
    CHECK(make_rational(Integer(12), Integer(4)) == Rational(3));
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), domain_error);
    CHECK_THROWS_AS(to_integer(Rational(1, 2)), domain_error);
    CHECK(factorial(5) == 120);
}
