#include "mwisp/geom/polygon.hpp"

#include "mwisp/error.hpp"
#include "mwisp/geom/region.hpp"

#include <algorithm>

namespace mwisp::geom {

Rational signed_area2(const Ring& ring) {
    Rational sum = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        sum += a.x * b.y - a.y * b.x;
    }
    return sum;
}

bool is_simple(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (ring[i] == ring[(i + 1) % n]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Segment ei{ring[i], ring[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            Segment ej{ring[j], ring[(j + 1) % n]};
            auto hit = segment_intersection(ei, ej);
            if (std::holds_alternative<std::monostate>(hit)) continue;
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (!adjacent) return false;
            if (std::holds_alternative<Segment>(hit)) return false;
            const Point& shared = (j == i + 1) ? ring[j] : ring[0];
            if (std::get<Point>(hit) != shared) return false;
        }
    }
    return sgn(signed_area2(ring)) != 0;
}

Ring remove_collinear(const Ring& ring) {
    Ring r = ring;
    bool changed = true;
    while (changed && r.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < r.size() && r.size() >= 3; ++i) {
            const Point& prev = r[(i + r.size() - 1) % r.size()];
            const Point& next = r[(i + 1) % r.size()];
            if (r[i] == next || orientation_sign(prev, r[i], next) == 0) {
                r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
            }
        }
    }
    if (r.size() < 3) r.clear();
    return r;
}

Ring rotate_to_min(const Ring& ring) {
    Ring r = ring;
    if (r.empty()) return r;
    std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    return r;
}

Location locate_in_ring(const Point& p, const Ring& ring) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (on_segment(p, {a, b})) return Location::Boundary;
        bool a_above = a.y > p.y;
        bool b_above = b.y > p.y;
        if (a_above == b_above) continue;
        // The rightward ray crosses the edge iff the crossing x exceeds p.x,
        // i.e. orientation(a, b, p) has the sign of (b.y - a.y).
        int o = orientation_sign(a, b, p);
        int dir = b_above ? 1 : -1;
        if (o == dir) inside = !inside;
    }
    return inside ? Location::Interior : Location::Exterior;
}

SimplePolygon SimplePolygon::make(Ring ring) {
    if (!is_simple(ring)) throw Error(ErrorCode::SelfIntersecting, "polygon boundary is not simple");
    if (sgn(signed_area2(ring)) < 0) std::reverse(ring.begin(), ring.end());
    return SimplePolygon(std::move(ring));
}

SimplePolygon SimplePolygon::make_unchecked(Ring ring) { return SimplePolygon(std::move(ring)); }

SimplePolygon make_triangle(const Point& a, const Point& b, const Point& c) {
    return SimplePolygon::make({a, b, c});
}

SimplePolygon make_rectangle(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return SimplePolygon::make({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

std::vector<SimplePolygon> triangulate(const SimplePolygon& p) {
    const Ring& v = p.vertices();
    if (!is_simple(v)) throw Error(ErrorCode::SelfIntersecting, "cannot triangulate a non-simple polygon");
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    std::vector<SimplePolygon> out;
    out.reserve(v.size() - 2);
    while (idx.size() > 3) {
        const std::size_t m = idx.size();
        bool clipped = false;
        for (std::size_t k = 0; k < m && !clipped; ++k) {
            const Point& a = v[idx[(k + m - 1) % m]];
            const Point& b = v[idx[k]];
            const Point& c = v[idx[(k + 1) % m]];
            if (orientation_sign(a, b, c) <= 0) continue;
            bool blocked = false;
            for (std::size_t t = 0; t < m && !blocked; ++t) {
                if (t == k || t == (k + 1) % m || t == (k + m - 1) % m) continue;
                const Point& q = v[idx[t]];
                blocked = orientation_sign(a, b, q) >= 0 && orientation_sign(b, c, q) >= 0 &&
                          orientation_sign(c, a, q) >= 0;
            }
            if (blocked) continue;
            out.push_back(SimplePolygon::make_unchecked({a, b, c}));
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
            clipped = true;
        }
        if (!clipped) throw Error(ErrorCode::SelfIntersecting, "no ear found (degenerate polygon)");
    }
    const Point& a = v[idx[0]];
    const Point& b = v[idx[1]];
    const Point& c = v[idx[2]];
    if (orientation_sign(a, b, c) <= 0) throw Error(ErrorCode::SelfIntersecting, "degenerate final triangle");
    out.push_back(SimplePolygon::make_unchecked({a, b, c}));
    return out;
}

namespace {

bool strictly_inside_bbox_overlap(const Bbox& a, const Bbox& b) {
    return a.xmin < b.xmax && b.xmin < a.xmax && a.ymin < b.ymax && b.ymin < a.ymax;
}

bool proper_crossing(const Segment& s, const Segment& t) {
    int o1 = orientation_sign(s.a, s.b, t.a);
    int o2 = orientation_sign(s.a, s.b, t.b);
    if (o1 * o2 >= 0) return false;
    int o3 = orientation_sign(t.a, t.b, s.a);
    int o4 = orientation_sign(t.a, t.b, s.b);
    return o3 * o4 < 0;
}

// Points where the closed segment s meets the boundary of ring, sorted along s.
std::vector<Point> cut_points(const Segment& s, const Ring& ring) {
    std::vector<Point> pts{s.a, s.b};
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto hit = segment_intersection(s, {ring[i], ring[(i + 1) % ring.size()]});
        if (auto* p = std::get_if<Point>(&hit)) pts.push_back(*p);
        if (auto* g = std::get_if<Segment>(&hit)) {
            pts.push_back(g->a);
            pts.push_back(g->b);
        }
    }
    bool forward = s.a < s.b;
    std::sort(pts.begin(), pts.end(), [&](const Point& x, const Point& y) { return forward ? x < y : y < x; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

bool segment_touches_polygon(const Segment& s, const SimplePolygon& p) {
    if (!Bbox::of(s.a, s.b).overlaps(p.bbox())) return false;
    auto pts = cut_points(s, p.vertices());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (locate_in_ring(midpoint(pts[i], pts[i + 1]), p.vertices()) == Location::Interior) return true;
    return false;
}

bool polygons_touch(const SimplePolygon& p, const SimplePolygon& q) {
    if (!strictly_inside_bbox_overlap(p.bbox(), q.bbox())) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (proper_crossing(p.edge(i), q.edge(j))) return true;
    for (const auto& v : q.vertices())
        if (locate_in_ring(v, p.vertices()) == Location::Interior) return true;
    for (const auto& v : p.vertices())
        if (locate_in_ring(v, q.vertices()) == Location::Interior) return true;
    return regions_touch(Region::from_polygon(p), Region::from_polygon(q));
}

}  // namespace mwisp::geom
