#include "mwisp/dp_points.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mwisp {

using geom::orientation_sign;

bool DpPointSet::is_basic(const Point& p) const { return std::binary_search(basic.begin(), basic.end(), p); }

bool DpPointSet::is_dp_point(const Point& p) const {
    if (is_basic(p)) return true;
    if (sgn(p.x) < 0 || sgn(p.y) < 0 || p.x > N || p.y > N) return false;
    // p is additional iff two lines through p each have basic points strictly
    // on both sides of p. Directions are keyed by slope (vertical: none).
    std::map<std::optional<Rational>, int> sides;  // bit 1: ahead, bit 2: behind
    for (const auto& q : basic) {
        Rational dx = q.x - p.x, dy = q.y - p.y;
        std::optional<Rational> slope;
        bool ahead;
        if (sgn(dx) == 0) {
            ahead = sgn(dy) > 0;
        } else {
            slope = dy / dx;
            ahead = sgn(dx) > 0;
        }
        sides[slope] |= ahead ? 1 : 2;
    }
    int full = 0;
    for (const auto& kv : sides)
        if (kv.second == 3) ++full;
    return full >= 2;
}

DpPointSet basic_dp_points_unchecked(const Instance& inst) {
    DpPointSet set;
    set.N = Rational(inst.N);
    std::set<Segment> et;
    std::set<Rational> xs;
    for (const auto& p : inst.polygons) {
        for (const auto& t : geom::triangulate(p.shape))
            for (std::size_t i = 0; i < 3; ++i) et.insert(t.edge(i).normalized());
        for (const auto& v : p.shape.vertices()) xs.insert(v.x);
    }
    set.triangulation_edges.assign(et.begin(), et.end());

    const Rational& n = set.N;
    std::set<Point> pts{Point(0, 0), Point(Rational(0), n), Point(n, Rational(0)), Point(n, n)};
    for (const auto& x : xs) {
        pts.insert(Point(x, Rational(0)));
        pts.insert(Point(x, n));
        for (const auto& e : set.triangulation_edges) {
            // e is normalized, so e.a.x <= e.b.x.
            if (x < e.a.x || x > e.b.x) continue;
            if (e.a.x == e.b.x) {
                pts.insert(e.a);
                pts.insert(e.b);
                continue;
            }
            Rational y = e.a.y + (e.b.y - e.a.y) * (x - e.a.x) / (e.b.x - e.a.x);
            pts.insert(Point(x, y));
        }
    }
    set.basic.assign(pts.begin(), pts.end());
    return set;
}

DpPointSet basic_dp_points(const Instance& inst) {
    if (!in_general_position(inst))
        throw Error(ErrorCode::NotGeneralPosition, "instance vertices are not in general position (run perturb)");
    return basic_dp_points_unchecked(inst);
}

std::vector<Point> additional_dp_points(const std::vector<Point>& basic_in, const Rational& N) {
    std::vector<Point> basic = basic_in;
    std::sort(basic.begin(), basic.end());
    basic.erase(std::unique(basic.begin(), basic.end()), basic.end());
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < basic.size(); ++i)
        for (std::size_t j = i + 1; j < basic.size(); ++j) segs.push_back({basic[i], basic[j]});
    std::vector<geom::Bbox> box;
    for (const auto& s : segs) box.push_back(geom::Bbox::of(s.a, s.b));
    std::set<Point> out;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (!box[i].overlaps(box[j])) continue;
            auto hit = geom::segment_intersection(segs[i], segs[j]);
            if (auto* p = std::get_if<Point>(&hit)) {
                if (sgn(p->x) < 0 || sgn(p->y) < 0 || p->x > N || p->y > N) continue;
                out.insert(*p);
            }
        }
    std::vector<Point> result;
    for (const auto& p : out)
        if (!std::binary_search(basic.begin(), basic.end(), p)) result.push_back(p);
    return result;
}

}  // namespace mwisp
