#pragma once

#include <selim/scalar.hpp>

#include <cstdint>
#include <vector>

namespace selim {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/*
 * Convex lattice polygon in canonical form: counterclockwise vertices
 * starting from the lexicographically smallest one, no repeated and no
 * collinear vertices. Degenerate hulls are allowed: a single point has one
 * vertex, a segment two.
 */
class ConvexPolygon {
public:
    /// Convex hull of an arbitrary point set (domain_error when empty).
    static ConvexPolygon hull_of(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    bool operator==(const ConvexPolygon& other) const = default;

private:
    explicit ConvexPolygon(std::vector<LatticePoint> verts) : verts_(std::move(verts)) {}
    friend ConvexPolygon minkowski_sum(const ConvexPolygon&, const ConvexPolygon&);

    std::vector<LatticePoint> verts_;
};

/*
 * Minkowski sum by the rotating-edge merge: both edge cycles, already in
 * counterclockwise angular order, are merged by direction; parallel edges
 * fuse into one. Runs in O(|p| + |q|).
 */
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// Independent route for cross-checks: hull of all pairwise vertex sums.
ConvexPolygon minkowski_sum_by_hull(const ConvexPolygon& p, const ConvexPolygon& q);

/// Twice the Euclidean area by the shoelace formula (exact, nonnegative).
Integer twice_area(const ConvexPolygon& p);

/*
 * Two-dimensional mixed volume area(p+q) - area(p) - area(q), normalized so
 * two unit segments spanning both axes give 1. Always an integer for
 * lattice polygons.
 */
Integer mixed_area_2d(const ConvexPolygon& p, const ConvexPolygon& q);

} // namespace selim
