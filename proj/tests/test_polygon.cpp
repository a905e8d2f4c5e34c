#include <doctest.h>

#include <selim/bounds.hpp>
#include <selim/error.hpp>
#include <selim/polygon.hpp>

#include "helpers.hpp"

using namespace selim;

namespace {

ConvexPolygon unit_square() {
    return ConvexPolygon::hull_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon segment_x(std::int64_t len) {
    return ConvexPolygon::hull_of({{0, 0}, {len, 0}});
}

ConvexPolygon segment_y(std::int64_t len) {
    return ConvexPolygon::hull_of({{0, 0}, {0, len}});
}

ConvexPolygon rectangle(std::int64_t w, std::int64_t h) {
    return ConvexPolygon::hull_of({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

ConvexPolygon random_polygon(std::mt19937_64& rng, std::size_t npoints, std::int64_t span) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < npoints; ++i)
        pts.push_back({test::rand_int(rng, -span, span), test::rand_int(rng, -span, span)});
    return ConvexPolygon::hull_of(std::move(pts));
}

} // namespace

TEST_CASE("hull canonicalization") {
    const ConvexPolygon sq =
        ConvexPolygon::hull_of({{1, 1}, {0, 0}, {1, 0}, {0, 1}, {0, 0}, {1, 0}});
    CHECK(sq.vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    // collinear input collapses to its extremes
    const ConvexPolygon seg = ConvexPolygon::hull_of({{0, 0}, {2, 2}, {1, 1}, {3, 3}});
    CHECK(seg.vertices() == std::vector<LatticePoint>{{0, 0}, {3, 3}});

    const ConvexPolygon pt = ConvexPolygon::hull_of({{5, -3}, {5, -3}});
    CHECK(pt.vertices() == std::vector<LatticePoint>{{5, -3}});

    CHECK_THROWS_AS(ConvexPolygon::hull_of({}), domain_error);

    // interior and edge-interior points are dropped
    const ConvexPolygon tri =
        ConvexPolygon::hull_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 0}, {0, 3}});
    CHECK(tri.vertices() == std::vector<LatticePoint>{{0, 0}, {4, 0}, {0, 4}});
}

TEST_CASE("areas") {
    CHECK(twice_area(unit_square()) == 2);
    CHECK(twice_area(segment_x(7)) == 0);
    CHECK(twice_area(ConvexPolygon::hull_of({{3, 4}})) == 0);
}

TEST_CASE("mixed area: pinned examples") {
    CHECK(mixed_area_2d(unit_square(), unit_square()) == 2);
    CHECK(mixed_area_2d(segment_x(1), segment_y(1)) == 1);
    const ConvexPolygon point = ConvexPolygon::hull_of({{2, 9}});
    CHECK(mixed_area_2d(unit_square(), point) == 0);
    CHECK(mixed_area_2d(segment_x(3), segment_x(5)) == 0); // parallel segments
}

TEST_CASE("Minkowski sum merge agrees with the pairwise-hull route") {
    CHECK(minkowski_sum(segment_x(1), segment_y(1)) == unit_square());

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t na = static_cast<std::size_t>(test::rand_int(rng, 1, 8));
        const std::size_t nb = static_cast<std::size_t>(test::rand_int(rng, 1, 8));
        const ConvexPolygon a = random_polygon(rng, na, 6);
        const ConvexPolygon b = random_polygon(rng, nb, 6);
        CHECK(minkowski_sum(a, b) == minkowski_sum_by_hull(a, b));
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    }
}

TEST_CASE("mixed area is symmetric and Minkowski-linear") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const ConvexPolygon p1 = random_polygon(rng, 5, 5);
        const ConvexPolygon p2 = random_polygon(rng, 5, 5);
        const ConvexPolygon q = random_polygon(rng, 5, 5);
        CHECK(mixed_area_2d(p1, q) == mixed_area_2d(q, p1));
        CHECK(mixed_area_2d(minkowski_sum(p1, p2), q) ==
              mixed_area_2d(p1, q) + mixed_area_2d(p2, q));
    }
}

TEST_CASE("permanent mixed volume equals the mixed area of product rectangles") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        // scale matrix entries in [0, 5]; zero collapses a factor
        const std::int64_t a11 = test::rand_int(rng, 0, 5), a12 = test::rand_int(rng, 0, 5);
        const std::int64_t a21 = test::rand_int(rng, 0, 5), a22 = test::rand_int(rng, 0, 5);
        const SimplexBlockSystem sys(BlockStructure({1, 1}),
                                     DegreeMatrix(2, 2, {a11, a12, a21, a22}),
                                     {Rational(1), Rational(1)});
        const Integer geometric = mixed_area_2d(rectangle(a11, a12), rectangle(a21, a22));
        CHECK(mixed_volume_permanent(sys) == Rational(geometric));
    }
}
