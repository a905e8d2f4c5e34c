#include <selim/polygon.hpp>

#include <selim/error.hpp>

#include <algorithm>
#include <cassert>
#include <utility>

namespace selim {

namespace {

using Wide = __int128;

Wide cross(const LatticePoint& origin, const LatticePoint& a, const LatticePoint& b) {
    return Wide(a.x - origin.x) * Wide(b.y - origin.y) - Wide(a.y - origin.y) * Wide(b.x - origin.x);
}

struct EdgeVec {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

Wide cross(const EdgeVec& u, const EdgeVec& v) {
    return Wide(u.x) * Wide(v.y) - Wide(u.y) * Wide(v.x);
}

// 0 for angles in [0, pi), 1 for [pi, 2*pi)
int half_plane(const EdgeVec& v) {
    if (v.y != 0)
        return v.y > 0 ? 0 : 1;
    return v.x > 0 ? 0 : 1;
}

bool angle_less(const EdgeVec& u, const EdgeVec& v) {
    const int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv)
        return hu < hv;
    return cross(u, v) > 0;
}

std::vector<EdgeVec> edge_cycle(const std::vector<LatticePoint>& verts) {
    std::vector<EdgeVec> edges;
    if (verts.size() < 2)
        return edges;
    edges.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const LatticePoint& a = verts[i];
        const LatticePoint& b = verts[(i + 1) % verts.size()];
        edges.push_back({b.x - a.x, b.y - a.y});
    }
    return edges;
}

// rotate so the bottom-most (then left-most) vertex comes first
std::vector<LatticePoint> rotate_to_bottom_left(std::vector<LatticePoint> verts) {
    const auto lowest = std::min_element(verts.begin(), verts.end(),
                                         [](const LatticePoint& a, const LatticePoint& b) {
                                             return std::pair(a.y, a.x) < std::pair(b.y, b.x);
                                         });
    std::rotate(verts.begin(), lowest, verts.end());
    return verts;
}

std::vector<LatticePoint> rotate_to_lex_min(std::vector<LatticePoint> verts) {
    const auto smallest = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), smallest, verts.end());
    return verts;
}

} // namespace

ConvexPolygon ConvexPolygon::hull_of(std::vector<LatticePoint> points) {
    if (points.empty())
        throw domain_error("convex hull of an empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2)
        return ConvexPolygon(std::move(points));

    // monotone chain, strict turns only (collinear points dropped)
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return ConvexPolygon(std::move(hull));
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.size() == 0 || q.size() == 0)
        throw domain_error("Minkowski sum of an empty polygon");

    const std::vector<LatticePoint> pv = rotate_to_bottom_left(p.vertices());
    const std::vector<LatticePoint> qv = rotate_to_bottom_left(q.vertices());
    const std::vector<EdgeVec> pe = edge_cycle(pv);
    const std::vector<EdgeVec> qe = edge_cycle(qv);

    // merge the two angular edge sequences, fusing parallel edges
    std::vector<EdgeVec> merged;
    merged.reserve(pe.size() + qe.size());
    std::size_t i = 0, j = 0;
    while (i < pe.size() || j < qe.size()) {
        if (i == pe.size()) {
            merged.push_back(qe[j++]);
        } else if (j == qe.size()) {
            merged.push_back(pe[i++]);
        } else if (angle_less(pe[i], qe[j])) {
            merged.push_back(pe[i++]);
        } else if (angle_less(qe[j], pe[i])) {
            merged.push_back(qe[j++]);
        } else {
            merged.push_back({pe[i].x + qe[j].x, pe[i].y + qe[j].y});
            ++i;
            ++j;
        }
    }

    LatticePoint pos{pv.front().x + qv.front().x, pv.front().y + qv.front().y};
    std::vector<LatticePoint> verts;
    verts.reserve(merged.size() + 1);
    if (merged.empty()) {
        verts.push_back(pos);
    } else {
        for (const EdgeVec& e : merged) {
            verts.push_back(pos);
            pos = {pos.x + e.x, pos.y + e.y};
        }
        assert(pos == verts.front()); // edge vectors of a closed cycle sum to zero
    }
    return ConvexPolygon(rotate_to_lex_min(std::move(verts)));
}

ConvexPolygon minkowski_sum_by_hull(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<LatticePoint> sums;
    sums.reserve(p.size() * q.size());
    for (const LatticePoint& a : p.vertices())
        for (const LatticePoint& b : q.vertices())
            sums.push_back({a.x + b.x, a.y + b.y});
    return ConvexPolygon::hull_of(std::move(sums));
}

Integer twice_area(const ConvexPolygon& p) {
    const std::vector<LatticePoint>& v = p.vertices();
    if (v.size() < 3)
        return Integer(0);
    Integer acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const LatticePoint& a = v[i];
        const LatticePoint& b = v[(i + 1) % v.size()];
        acc += Integer(a.x) * Integer(b.y) - Integer(b.x) * Integer(a.y);
    }
    if (acc < 0)
        throw invariant_error("clockwise vertex order in a canonical polygon");
    return acc;
}

Integer mixed_area_2d(const ConvexPolygon& p, const ConvexPolygon& q) {
    const Integer doubled = twice_area(minkowski_sum(p, q)) - twice_area(p) - twice_area(q);
    if (mpz_odd_p(doubled.get_mpz_t()))
        throw invariant_error("mixed area of lattice polygons must be an integer");
    return doubled / 2;
}

} // namespace selim
