#include "mwisp/error.hpp"
#include "mwisp/geom/region.hpp"

#include <algorithm>
#include <map>

namespace mwisp::geom {

namespace {

enum class Side { Inside, Outside, SharedSame, SharedOpposite };

struct Overlay {
    std::vector<Segment> a_sub, b_sub;
    std::vector<Side> a_side, b_side;
};

// Splits every edge at every point where it meets another edge (of either
// region, including its own).
std::vector<std::vector<Segment>> split_edges(const std::vector<Segment>& edges) {
    std::vector<Bbox> box;
    box.reserve(edges.size());
    for (const auto& e : edges) box.push_back(Bbox::of(e.a, e.b));

    std::vector<std::vector<Point>> cuts(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!box[i].overlaps(box[j])) continue;
            auto hit = segment_intersection(edges[i], edges[j]);
            if (auto* p = std::get_if<Point>(&hit)) {
                cuts[i].push_back(*p);
                cuts[j].push_back(*p);
            } else if (auto* s = std::get_if<Segment>(&hit)) {
                cuts[i].push_back(s->a);
                cuts[i].push_back(s->b);
                cuts[j].push_back(s->a);
                cuts[j].push_back(s->b);
            }
        }
    }
    std::vector<std::vector<Segment>> out(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Segment& e = edges[i];
        auto& pts = cuts[i];
        pts.push_back(e.a);
        pts.push_back(e.b);
        bool forward = e.a < e.b;
        std::sort(pts.begin(), pts.end(), [&](const Point& x, const Point& y) { return forward ? x < y : y < x; });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) out[i].push_back({pts[k], pts[k + 1]});
    }
    return out;
}

Side classify(const Segment& sub, const Region& other, const std::map<Segment, bool>& other_dirs) {
    Location loc = point_in_region(midpoint(sub.a, sub.b), other);
    if (loc == Location::Interior) return Side::Inside;
    if (loc == Location::Exterior) return Side::Outside;
    Segment key = sub.normalized();
    auto it = other_dirs.find(key);
    if (it == other_dirs.end()) throw Error(ErrorCode::InternalInvariant, "boundary sub-edge without partner");
    bool same = it->second == (sub.a < sub.b);
    return same ? Side::SharedSame : Side::SharedOpposite;
}

Overlay overlay(const Region& a, const Region& b) {
    auto ea = a.boundary_edges();
    auto eb = b.boundary_edges();
    std::vector<Segment> all = ea;
    all.insert(all.end(), eb.begin(), eb.end());
    auto pieces = split_edges(all);

    Overlay ov;
    for (std::size_t i = 0; i < ea.size(); ++i)
        ov.a_sub.insert(ov.a_sub.end(), pieces[i].begin(), pieces[i].end());
    for (std::size_t i = ea.size(); i < all.size(); ++i)
        ov.b_sub.insert(ov.b_sub.end(), pieces[i].begin(), pieces[i].end());

    std::map<Segment, bool> a_dirs, b_dirs;
    for (const auto& s : ov.a_sub) a_dirs.emplace(s.normalized(), s.a < s.b);
    for (const auto& s : ov.b_sub) b_dirs.emplace(s.normalized(), s.a < s.b);
    for (const auto& s : ov.a_sub) ov.a_side.push_back(classify(s, b, b_dirs));
    for (const auto& s : ov.b_sub) ov.b_side.push_back(classify(s, a, a_dirs));
    return ov;
}

bool disjoint_boxes(const Region& r, const Region& g) {
    Bbox a = r.bbox(), b = g.bbox();
    return !(a.xmin < b.xmax && b.xmin < a.xmax && a.ymin < b.ymax && b.ymin < a.ymax);
}

}  // namespace

Region region_intersect(const Region& r, const Region& g) {
    if (r.empty() || g.empty() || disjoint_boxes(r, g)) return Region();
    Overlay ov = overlay(r, g);
    std::vector<Segment> keep;
    for (std::size_t i = 0; i < ov.a_sub.size(); ++i)
        if (ov.a_side[i] == Side::Inside || ov.a_side[i] == Side::SharedSame) keep.push_back(ov.a_sub[i]);
    for (std::size_t i = 0; i < ov.b_sub.size(); ++i)
        if (ov.b_side[i] == Side::Inside) keep.push_back(ov.b_sub[i]);
    return assemble_region(std::move(keep));
}

Region region_subtract(const Region& r, const Region& g) {
    if (r.empty()) return Region();
    if (g.empty() || disjoint_boxes(r, g)) return r.canonical();
    Overlay ov = overlay(r, g);
    std::vector<Segment> keep;
    for (std::size_t i = 0; i < ov.a_sub.size(); ++i)
        if (ov.a_side[i] == Side::Outside || ov.a_side[i] == Side::SharedOpposite) keep.push_back(ov.a_sub[i]);
    for (std::size_t i = 0; i < ov.b_sub.size(); ++i)
        if (ov.b_side[i] == Side::Inside) keep.push_back({ov.b_sub[i].b, ov.b_sub[i].a});
    return assemble_region(std::move(keep));
}

bool regions_touch(const Region& r, const Region& g) {
    if (r.empty() || g.empty() || disjoint_boxes(r, g)) return false;
    Overlay ov = overlay(r, g);
    for (Side s : ov.a_side)
        if (s == Side::Inside || s == Side::SharedSame) return true;
    for (Side s : ov.b_side)
        if (s == Side::Inside) return true;
    return false;
}

bool region_contains(const Region& r, const Region& g) {
    if (g.empty()) return true;
    if (r.empty()) return false;
    Bbox a = r.bbox(), b = g.bbox();
    if (b.xmin < a.xmin || b.xmax > a.xmax || b.ymin < a.ymin || b.ymax > a.ymax) return false;
    Overlay ov = overlay(r, g);
    for (Side s : ov.b_side)
        if (s == Side::Outside || s == Side::SharedOpposite) return false;
    for (Side s : ov.a_side)
        if (s == Side::Inside) return false;
    return true;
}

}  // namespace mwisp::geom
