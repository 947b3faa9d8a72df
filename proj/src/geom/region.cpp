#include "mwisp/geom/region.hpp"

#include "mwisp/error.hpp"

#include <algorithm>
#include <map>

namespace mwisp::geom {

Region::Region(std::vector<RegionComponent> components) : comps_(std::move(components)) {}

Region Region::from_polygon(const SimplePolygon& p) { return from_ring(p.vertices()); }

Region Region::from_ring(const Ring& ccw_ring) { return Region({RegionComponent{ccw_ring, {}}}); }

Region Region::square(const Rational& n) {
    return from_ring({{Rational(0), Rational(0)}, {n, Rational(0)}, {n, n}, {Rational(0), n}});
}

Rational Region::area() const {
    Rational sum = 0;
    for (const auto& c : comps_) {
        sum += signed_area2(c.outer);
        for (const auto& h : c.holes) sum += signed_area2(h);
    }
    return sum / 2;
}

std::size_t Region::edge_count() const {
    std::size_t n = 0;
    for (const auto& c : comps_) {
        n += c.outer.size();
        for (const auto& h : c.holes) n += h.size();
    }
    return n;
}

Bbox Region::bbox() const {
    Bbox box = Bbox::of(comps_.at(0).outer);
    for (std::size_t i = 1; i < comps_.size(); ++i) box.extend(Bbox::of(comps_[i].outer));
    return box;
}

std::vector<Region> Region::split() const {
    std::vector<Region> out;
    for (const auto& c : comps_) out.push_back(Region({c}));
    return out;
}

namespace {
void ring_edges(const Ring& r, std::vector<Segment>& out) {
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back({r[i], r[(i + 1) % r.size()]});
}
}  // namespace

std::vector<Segment> Region::boundary_edges() const {
    std::vector<Segment> out;
    for (const auto& c : comps_) {
        ring_edges(c.outer, out);
        for (const auto& h : c.holes) ring_edges(h, out);
    }
    return out;
}

std::vector<Point> Region::corners() const {
    std::vector<Point> out;
    for (const auto& c : comps_) {
        out.insert(out.end(), c.outer.begin(), c.outer.end());
        for (const auto& h : c.holes) out.insert(out.end(), h.begin(), h.end());
    }
    return out;
}

Region Region::canonical() const {
    std::vector<RegionComponent> comps;
    for (const auto& c : comps_) {
        RegionComponent k;
        k.outer = rotate_to_min(remove_collinear(c.outer));
        if (k.outer.empty()) continue;
        for (const auto& h : c.holes) {
            Ring r = rotate_to_min(remove_collinear(h));
            if (!r.empty()) k.holes.push_back(std::move(r));
        }
        std::sort(k.holes.begin(), k.holes.end());
        comps.push_back(std::move(k));
    }
    std::sort(comps.begin(), comps.end(), [](const RegionComponent& a, const RegionComponent& b) {
        if (a.outer != b.outer) return a.outer < b.outer;
        return a.holes < b.holes;
    });
    return Region(std::move(comps));
}

std::string Region::key() const {
    Region c = canonical();
    std::string s;
    auto put_ring = [&s](const Ring& r) {
        for (const auto& p : r) {
            s += p.x.get_str();
            s += ',';
            s += p.y.get_str();
            s += ';';
        }
    };
    for (const auto& comp : c.components()) {
        s += 'O';
        put_ring(comp.outer);
        for (const auto& h : comp.holes) {
            s += 'H';
            put_ring(h);
        }
        s += '|';
    }
    return s;
}

Location point_in_region(const Point& p, const Region& r) {
    for (const auto& c : r.components()) {
        Location lo = locate_in_ring(p, c.outer);
        if (lo == Location::Boundary) return Location::Boundary;
        if (lo == Location::Exterior) continue;
        bool in_hole = false;
        for (const auto& h : c.holes) {
            Location lh = locate_in_ring(p, h);
            if (lh == Location::Boundary) return Location::Boundary;
            if (lh == Location::Interior) {
                in_hole = true;
                break;
            }
        }
        if (!in_hole) return Location::Interior;
    }
    return Location::Exterior;
}

namespace {

// True iff the counter-clockwise angle from r to a is smaller than from r to b.
// Angle 0 (same direction as r) counts as the smallest.
bool ccw_from_less(const Point& r, const Point& a, const Point& b) {
    auto half = [&r](const Point& v) {
        Rational c = r.x * v.y - r.y * v.x;
        if (sgn(c) > 0) return 0;
        if (sgn(c) == 0) {
            Rational d = r.x * v.x + r.y * v.y;
            if (sgn(d) > 0) return 0;
        }
        return 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational c = a.x * b.y - a.y * b.x;
    return sgn(c) > 0;
}

Point direction(const Point& from, const Point& to) { return Point(to.x - from.x, to.y - from.y); }

void split_ring(const Ring& ring, std::vector<Ring>& out) {
    std::map<Point, std::size_t> seen;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        auto [it, fresh] = seen.emplace(ring[j], j);
        if (fresh) continue;
        std::size_t i = it->second;
        Ring inner(ring.begin() + static_cast<std::ptrdiff_t>(i), ring.begin() + static_cast<std::ptrdiff_t>(j));
        Ring outer(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(i));
        outer.insert(outer.end(), ring.begin() + static_cast<std::ptrdiff_t>(j), ring.end());
        split_ring(inner, out);
        split_ring(outer, out);
        return;
    }
    Ring clean = remove_collinear(ring);
    if (!clean.empty()) out.push_back(std::move(clean));
}

}  // namespace

Region assemble_region(std::vector<Segment> directed_edges) {
    // Cancel opposite pairs, drop duplicates.
    std::map<Segment, bool> live;
    for (auto& e : directed_edges) {
        if (e.a == e.b) continue;
        Segment rev{e.b, e.a};
        auto it = live.find(rev);
        if (it != live.end()) {
            live.erase(it);
            continue;
        }
        live.emplace(e, true);
    }
    std::vector<Segment> edges;
    edges.reserve(live.size());
    for (auto& kv : live) edges.push_back(kv.first);

    std::map<Point, std::vector<std::size_t>> out_of;
    for (std::size_t i = 0; i < edges.size(); ++i) out_of[edges[i].a].push_back(i);

    std::vector<bool> used(edges.size(), false);
    std::vector<Ring> rings;
    for (std::size_t s = 0; s < edges.size(); ++s) {
        if (used[s]) continue;
        Ring walk;
        std::size_t cur = s;
        used[s] = true;
        for (std::size_t guard = 0;; ++guard) {
            if (guard > edges.size()) throw Error(ErrorCode::InternalInvariant, "ring tracing did not close");
            walk.push_back(edges[cur].a);
            const Point& v = edges[cur].b;
            Point back = direction(v, edges[cur].a);
            std::size_t best = edges.size();
            for (std::size_t cand : out_of[v]) {
                if (used[cand] && cand != s) continue;
                if (best == edges.size()) {
                    best = cand;
                    continue;
                }
                // Tightest left turn = largest counter-clockwise angle from back.
                if (ccw_from_less(back, direction(v, edges[best].b), direction(v, edges[cand].b))) best = cand;
            }
            if (best == edges.size()) throw Error(ErrorCode::InternalInvariant, "dangling edge in region boundary");
            if (best == s) break;
            used[best] = true;
            cur = best;
        }
        split_ring(walk, rings);
    }

    std::vector<Ring> outers, holes;
    for (auto& r : rings) {
        int sg = sgn(signed_area2(r));
        if (sg > 0) outers.push_back(std::move(r));
        else if (sg < 0) holes.push_back(std::move(r));
    }
    std::vector<Rational> outer_area;
    for (const auto& o : outers) outer_area.push_back(signed_area2(o));
    std::vector<RegionComponent> comps;
    for (auto& o : outers) comps.push_back({o, {}});

    for (auto& h : holes) {
        std::size_t owner = outers.size();
        for (std::size_t i = 0; i < outers.size(); ++i) {
            if (owner < outers.size() && outer_area[i] >= outer_area[owner]) continue;
            // A probe point of the hole that is not on this outer boundary.
            Location where = Location::Boundary;
            for (std::size_t k = 0; k < h.size() && where == Location::Boundary; ++k)
                where = locate_in_ring(h[k], outers[i]);
            for (std::size_t k = 0; k < h.size() && where == Location::Boundary; ++k)
                where = locate_in_ring(midpoint(h[k], h[(k + 1) % h.size()]), outers[i]);
            if (where == Location::Interior) owner = i;
        }
        if (owner == outers.size()) throw Error(ErrorCode::InternalInvariant, "hole ring without enclosing outer");
        comps[owner].holes.push_back(std::move(h));
    }
    return Region(std::move(comps)).canonical();
}

}  // namespace mwisp::geom
