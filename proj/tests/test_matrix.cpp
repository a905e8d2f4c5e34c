#include <doctest.h>

#include <selim/error.hpp>
#include <selim/matrix.hpp>

#include "helpers.hpp"

using namespace selim;

namespace {

// independent determinant oracle: cofactor expansion along the first row
Rational det_cofactor(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);
    if (n == 1)
        return m.at(0, 0);
    Rational total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        QMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

QMatrix ones_minus_identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = (i == j) ? 0 : 1;
    return m;
}

} // namespace

TEST_CASE("determinant: pinned examples") {
    QMatrix m(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(det_fraction_free(m) == Rational(-2));
    CHECK(det_fraction_free(QMatrix::identity(5)) == Rational(1));

    QMatrix zero_row(3, 3);
    zero_row.at(0, 0) = 4;
    zero_row.at(0, 2) = -1;
    zero_row.at(2, 1) = 7; // row 1 stays zero
    CHECK(det_fraction_free(zero_row) == Rational(0));

    CHECK_THROWS_AS(det_fraction_free(QMatrix(2, 3)), dimension_error);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 1, 5));
        const QMatrix m = test::random_int_matrix(rng, n, -9, 9);
        CHECK(det_fraction_free(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant alternates under row swaps, permanent does not") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 2, 5));
        QMatrix m = test::random_int_matrix(rng, n, -5, 5);
        const Rational d = det_fraction_free(m);
        const Rational p = permanent_ryser(m);
        const auto i = static_cast<std::size_t>(test::rand_int(rng, 0, n - 1));
        const auto j = static_cast<std::size_t>(test::rand_int(rng, 0, n - 2));
        const std::size_t other = j >= i ? j + 1 : j;
        m.swap_rows(i, other);
        CHECK(det_fraction_free(m) == -d);
        CHECK(permanent_ryser(m) == p);
    }
}

TEST_CASE("permanent: pinned examples") {
    CHECK(permanent_ryser(QMatrix::identity(4)) == Rational(1));
    CHECK(permanent_bruteforce(QMatrix::identity(4)) == Rational(1));

    QMatrix ones3(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            ones3.at(i, j) = 1;
    CHECK(permanent_bruteforce(ones3) == Rational(6));
    CHECK(permanent_ryser(ones3) == Rational(6));

    QMatrix ones4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            ones4.at(i, j) = 1;
    CHECK(permanent_bruteforce(ones4) == Rational(24));

    CHECK(permanent_bruteforce(ones_minus_identity(3)) == Rational(2));
    CHECK(permanent_bruteforce(ones_minus_identity(4)) == Rational(9));

    CHECK_THROWS_AS(permanent_ryser(QMatrix(2, 3)), dimension_error);
    CHECK_THROWS_AS(permanent_bruteforce(QMatrix(2, 3)), dimension_error);
    CHECK_THROWS_AS(permanent_bruteforce(QMatrix(9, 9)), resource_error);
    CHECK_THROWS_AS(permanent_ryser(QMatrix(5, 5), 4), resource_error);
}

TEST_CASE("Ryser agrees with brute force on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 1, 7));
        const QMatrix m = test::random_int_matrix(rng, n, -9, 9);
        CHECK(permanent_ryser(m) == permanent_bruteforce(m));
    }
}

TEST_CASE("rank and kernel basis") {
    // rows: (1, 2, 3), (2, 4, 6) -> rank 1, kernel dimension 2
    QMatrix m(2, 3,
              {Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6)});
    CHECK(rank(m) == 1);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational dot(0);
            for (std::size_t j = 0; j < m.cols(); ++j)
                dot += m.at(i, j) * v[j];
            CHECK(dot == 0);
        }

    CHECK(rank(QMatrix::identity(4)) == 4);
    CHECK(kernel_basis(QMatrix::identity(4)).empty());
}

TEST_CASE("kernel basis is canonical and exact on random matrices") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(test::rand_int(rng, 2, 6));
        QMatrix m(n - 1, n); // wide: kernel never empty
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = test::rand_rational_int(rng, -5, 5);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == n - rank(m));
        for (const auto& v : basis)
            for (std::size_t i = 0; i + 1 < n; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < n; ++j)
                    dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}
