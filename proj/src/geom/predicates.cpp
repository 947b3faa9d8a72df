#include "mwisp/geom/predicates.hpp"

namespace mwisp::geom {

Rational cross(const Point& a, const Point& b, const Point& c) {
    Rational r = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return r;
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    // Compare the two products instead of subtracting; saves a temporary.
    Rational l = (b.x - a.x) * (c.y - a.y);
    Rational r = (b.y - a.y) * (c.x - a.x);
    int s = cmp(l, r);
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    return static_cast<Orientation>(orientation_sign(a, b, c));
}

bool on_segment(const Point& p, const Segment& s) {
    if (orientation_sign(s.a, s.b, p) != 0) return false;
    const auto& lo_x = s.a.x < s.b.x ? s.a.x : s.b.x;
    const auto& hi_x = s.a.x < s.b.x ? s.b.x : s.a.x;
    const auto& lo_y = s.a.y < s.b.y ? s.a.y : s.b.y;
    const auto& hi_y = s.a.y < s.b.y ? s.b.y : s.a.y;
    return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

bool in_segment_interior(const Point& p, const Segment& s) {
    return p != s.a && p != s.b && on_segment(p, s);
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    if (!Bbox::of(s1.a, s1.b).overlaps(Bbox::of(s2.a, s2.b))) return std::monostate{};

    int o1 = orientation_sign(s1.a, s1.b, s2.a);
    int o2 = orientation_sign(s1.a, s1.b, s2.b);
    int o3 = orientation_sign(s2.a, s2.b, s1.a);
    int o4 = orientation_sign(s2.a, s2.b, s1.b);

    if (o1 == 0 && o2 == 0) {
        // Collinear. Points on a common line are ordered lexicographically.
        Segment n1 = s1.normalized();
        Segment n2 = s2.normalized();
        const Point& lo = n1.a < n2.a ? n2.a : n1.a;
        const Point& hi = n1.b < n2.b ? n1.b : n2.b;
        if (hi < lo) return std::monostate{};
        if (lo == hi) return lo;
        return Segment{lo, hi};
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return std::monostate{};

    // Endpoint touching: return the endpoint itself, no arithmetic needed.
    if (o1 == 0) return s2.a;
    if (o2 == 0) return s2.b;
    if (o3 == 0) return s1.a;
    if (o4 == 0) return s1.b;

    // Proper crossing. Compute from the lexicographically smaller segment so the
    // result is literally the same object regardless of argument order (it is
    // exact anyway, but this keeps the arithmetic path fixed).
    Segment p = s1.normalized(), q = s2.normalized();
    if (q < p) std::swap(p, q);
    Rational dx = p.b.x - p.a.x, dy = p.b.y - p.a.y;
    Rational ex = q.b.x - q.a.x, ey = q.b.y - q.a.y;
    Rational denom = dx * ey - dy * ex;
    Rational t = ((q.a.x - p.a.x) * ey - (q.a.y - p.a.y) * ex) / denom;
    return Point(p.a.x + t * dx, p.a.y + t * dy);
}

namespace {
// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point& v) {
    if (sgn(v.y) > 0) return 0;
    if (sgn(v.y) == 0 && sgn(v.x) > 0) return 0;
    return 1;
}
}  // namespace

bool angle_less(const Point& u, const Point& v) {
    int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv) return hu < hv;
    Rational c = u.x * v.y - u.y * v.x;
    return sgn(c) > 0;
}

}  // namespace mwisp::geom
