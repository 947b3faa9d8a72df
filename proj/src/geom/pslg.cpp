#include "mwisp/geom/pslg.hpp"

#include "mwisp/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mwisp::geom {

std::vector<Segment> split_at_touches(const std::vector<Segment>& segments) {
    std::set<Segment> uniq;
    for (const auto& s : segments)
        if (s.a != s.b) uniq.insert(s.normalized());
    std::vector<Segment> segs(uniq.begin(), uniq.end());
    std::vector<Bbox> box;
    for (const auto& s : segs) box.push_back(Bbox::of(s.a, s.b));

    std::vector<std::vector<Point>> cuts(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (!box[i].overlaps(box[j])) continue;
            auto hit = segment_intersection(segs[i], segs[j]);
            if (auto* p = std::get_if<Point>(&hit)) {
                cuts[i].push_back(*p);
                cuts[j].push_back(*p);
            } else if (auto* g = std::get_if<Segment>(&hit)) {
                for (auto* q : {&g->a, &g->b}) {
                    cuts[i].push_back(*q);
                    cuts[j].push_back(*q);
                }
            }
        }
    }
    std::set<Segment> pieces;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        auto& pts = cuts[i];
        pts.push_back(segs[i].a);
        pts.push_back(segs[i].b);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) pieces.insert({pts[k], pts[k + 1]});
    }
    return {pieces.begin(), pieces.end()};
}

Pslg::Pslg(const std::vector<Segment>& segments) {
    for (const auto& s : segments) {
        if (s.a == s.b) throw Error(ErrorCode::InternalInvariant, "zero-length segment in PSLG");
        for (const Point* p : {&s.a, &s.b}) {
            if (index_.emplace(*p, verts_.size()).second) verts_.push_back(*p);
        }
    }
    segs_ = segments;
    he_.resize(2 * segs_.size());
    out_.assign(verts_.size(), {});
    for (std::size_t s = 0; s < segs_.size(); ++s) {
        std::size_t a = index_.at(segs_[s].a), b = index_.at(segs_[s].b);
        he_[2 * s].origin = a;
        he_[2 * s].target = b;
        he_[2 * s + 1].origin = b;
        he_[2 * s + 1].target = a;
        out_[a].push_back(2 * s);
        out_[b].push_back(2 * s + 1);
    }
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        auto dir = [&](std::size_t h) {
            const Point& o = verts_[he_[h].origin];
            const Point& t = verts_[he_[h].target];
            return Point(t.x - o.x, t.y - o.y);
        };
        std::sort(out_[v].begin(), out_[v].end(),
                  [&](std::size_t x, std::size_t y) { return angle_less(dir(x), dir(y)); });
    }
    for (std::size_t h = 0; h < he_.size(); ++h) {
        // next(h): at the target, the outgoing edge just clockwise of twin(h).
        const auto& ring = out_[he_[h].target];
        auto pos = std::find(ring.begin(), ring.end(), twin(h)) - ring.begin();
        he_[h].next = ring[(static_cast<std::size_t>(pos) + ring.size() - 1) % ring.size()];
    }

    // Trace walks.
    std::vector<std::vector<std::size_t>> walks;
    std::vector<std::size_t> walk_of(he_.size(), SIZE_MAX);
    for (std::size_t h = 0; h < he_.size(); ++h) {
        if (walk_of[h] != SIZE_MAX) continue;
        std::vector<std::size_t> w;
        for (std::size_t cur = h; walk_of[cur] == SIZE_MAX; cur = he_[cur].next) {
            walk_of[cur] = walks.size();
            w.push_back(cur);
        }
        walks.push_back(std::move(w));
    }
    auto walk_ring = [&](const std::vector<std::size_t>& w) {
        Ring r;
        for (auto h : w) r.push_back(verts_[he_[h].origin]);
        return r;
    };

    // Connected components (union-find over segments).
    std::vector<std::size_t> parent(verts_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s < segs_.size(); ++s) parent[find(he_[2 * s].origin)] = find(he_[2 * s].target);
    for (std::size_t v = 0; v < verts_.size(); ++v)
        if (find(v) == v) ++components_;

    faces_.assign(1, {});
    std::vector<std::size_t> positive_face(walks.size(), 0);
    std::vector<Ring> rings;
    std::vector<Rational> area;
    for (std::size_t i = 0; i < walks.size(); ++i) {
        rings.push_back(walk_ring(walks[i]));
        area.push_back(signed_area2(rings.back()));
        if (sgn(area.back()) > 0) {
            positive_face[i] = faces_.size();
            faces_.push_back({walks[i]});
        }
    }
    for (std::size_t i = 0; i < walks.size(); ++i) {
        if (sgn(area[i]) > 0) continue;
        // Inner boundary of the smallest bounded walk that encloses it.
        std::size_t owner = SIZE_MAX;
        const Point& probe = rings[i].front();
        for (std::size_t j = 0; j < walks.size(); ++j) {
            if (sgn(area[j]) <= 0) continue;
            if (owner != SIZE_MAX && area[j] >= area[owner]) continue;
            if (locate_in_ring(probe, rings[j]) == Location::Interior) owner = j;
        }
        std::size_t f = owner == SIZE_MAX ? 0 : positive_face[owner];
        faces_[f].push_back(walks[i]);
    }
    for (std::size_t f = 0; f < faces_.size(); ++f)
        for (const auto& w : faces_[f])
            for (auto h : w) he_[h].face = f;
}

std::size_t Pslg::vertex_id(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(ErrorCode::InternalInvariant, "point is not a PSLG vertex: " + to_string(p));
    return it->second;
}

Region Pslg::face_region(std::size_t f) const {
    if (f == 0) throw Error(ErrorCode::InternalInvariant, "unbounded face has no region");
    std::vector<Segment> edges;
    for (const auto& w : faces_[f])
        for (auto h : w) edges.push_back({verts_[he_[h].origin], verts_[he_[h].target]});
    return assemble_region(std::move(edges));
}

}  // namespace mwisp::geom
