#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <variant>
#include <string>

namespace fx {

using mwisp::geom::orientation_sign;

Point P(long x, long y) { return Point(x, y); }

SimplePolygon rect(long x0, long y0, long x1, long y1) {
    return SimplePolygon::make({P(x0, y0), P(x1, y0), P(x1, y1), P(x0, y1)});
}

SimplePolygon tri(long ax, long ay, long bx, long by, long cx, long cy) {
    return SimplePolygon::make({P(ax, ay), P(bx, by), P(cx, cy)});
}

Rational shoelace2(const Ring& r) {
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % r.size()];
        s += (a.x - b.x) * (a.y + b.y);
    }
    return s;
}

namespace {
// Projections of a ring onto the normal of (a, b).
void project(const Ring& r, const Point& a, const Point& b, Rational& lo, Rational& hi) {
    Rational nx = a.y - b.y, ny = b.x - a.x;
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rational v = r[i].x * nx + r[i].y * ny;
        if (i == 0 || v < lo) lo = v;
        if (i == 0 || v > hi) hi = v;
    }
}
}  // namespace

bool convex_interiors_meet(const Ring& a, const Ring& b) {
    for (const Ring* r : {&a, &b}) {
        for (std::size_t i = 0; i < r->size(); ++i) {
            const Point& p = (*r)[i];
            const Point& q = (*r)[(i + 1) % r->size()];
            Rational alo, ahi, blo, bhi;
            project(a, p, q, alo, ahi);
            project(b, p, q, blo, bhi);
            if (ahi <= blo || bhi <= alo) return false;
        }
    }
    return true;
}

bool touch_oracle(const SimplePolygon& p, const SimplePolygon& q) {
    for (const auto& s : mwisp::geom::triangulate(p))
        for (const auto& t : mwisp::geom::triangulate(q))
            if (convex_interiors_meet(s.vertices(), t.vertices())) return true;
    return false;
}

bool has_collinear_triple(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                Rational d = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                             (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                if (d == 0) return true;
            }
    return false;
}

SubsetBest subset_mwis(const std::vector<Rational>& w, const std::vector<std::vector<bool>>& adj) {
    const std::size_t n = w.size();
    SubsetBest best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        Rational sum = 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1U)) continue;
            sum += w[i];
            for (std::size_t j = i + 1; j < n; ++j)
                if ((mask >> j & 1U) && adj[i][j]) ok = false;
        }
        if (ok && sum > best.weight) {
            best.weight = sum;
            best.members.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1U) best.members.push_back(i);
        }
    }
    return best;
}

SimplePolygon random_small_polygon(mwisp::Rng& rng, long grid) {
    for (;;) {
        long kind = rng.uniform(0, 2);
        if (kind == 0) {
            Point a = P(rng.uniform(0, grid), rng.uniform(0, grid));
            Point b = P(rng.uniform(0, grid), rng.uniform(0, grid));
            Point c = P(rng.uniform(0, grid), rng.uniform(0, grid));
            if (orientation_sign(a, b, c) != 0) return SimplePolygon::make({a, b, c});
        } else if (kind == 1) {
            long x0 = rng.uniform(0, grid - 1), y0 = rng.uniform(0, grid - 1);
            long x1 = rng.uniform(x0 + 1, grid), y1 = rng.uniform(y0 + 1, grid);
            return rect(x0, y0, x1, y1);
        } else {
            // Star around an integer centre with 4..6 spikes.
            long cx = rng.uniform(1, grid - 1), cy = rng.uniform(1, grid - 1);
            long m = rng.uniform(4, 6);
            std::vector<Point> pts;
            for (long i = 0; i < m; ++i) pts.push_back(P(rng.uniform(0, grid), rng.uniform(0, grid)));
            Point c = P(cx, cy);
            std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
                return mwisp::geom::angle_less(Point(a.x - c.x, a.y - c.y), Point(b.x - c.x, b.y - c.y));
            });
            Ring r(pts.begin(), pts.end());
            if (mwisp::geom::is_simple(r)) return SimplePolygon::make(r);
        }
    }
}

Rational touched_weight(const Region& r, const Instance& ts) {
    Rational w = 0;
    for (const auto& t : ts.polygons)
        if (mwisp::geom::regions_touch(r, Region::from_polygon(t.shape))) w += t.weight;
    return w;
}

bool segment_meets_open_triangle(const Segment& s, const Ring& tri) {
    std::vector<Rational> cuts{0, 1};
    for (std::size_t k = 0; k < tri.size(); ++k) {
        auto x = mwisp::geom::segment_intersection(s, Segment{tri[k], tri[(k + 1) % tri.size()]});
        if (auto* p = std::get_if<Point>(&x))
            cuts.push_back(s.a.x != s.b.x ? (p->x - s.a.x) / (s.b.x - s.a.x) : (p->y - s.a.y) / (s.b.y - s.a.y));
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Rational m = (cuts[k] + cuts[k + 1]) / 2;
        Point q(s.a.x + m * (s.b.x - s.a.x), s.a.y + m * (s.b.y - s.a.y));
        if (mwisp::geom::locate_in_ring(q, tri) == mwisp::geom::Location::Interior) return true;
    }
    return false;
}

std::optional<SmallGraph> small_plane_graph(std::uint64_t seed) {
    mwisp::Rng rng(seed);
    std::vector<Segment> segs;
    auto S = [&](long a, long b, long c, long d) { segs.push_back(Segment{P(a, b), P(c, d)}.normalized()); };
    for (long i = 0; i < 2; ++i) {
        S(i, 0, i + 1, 0);
        S(i, 2, i + 1, 2);
        S(0, i, 0, i + 1);
        S(2, i, 2, i + 1);
    }
    if (rng.uniform(0, 1)) S(1, 0, 1, 1);
    if (rng.uniform(0, 1)) S(1, 1, 1, 2);
    if (rng.uniform(0, 1)) S(0, 1, 1, 1);
    if (rng.uniform(0, 1)) S(1, 1, 2, 1);
    for (long qx = 0; qx < 2; ++qx)
        for (long qy = 0; qy < 2; ++qy) {
            long d = rng.uniform(0, 2);
            if (d == 1) S(qx, qy, qx + 1, qy + 1);
            if (d == 2) S(qx + 1, qy, qx, qy + 1);
        }
    SmallGraph g;
    g.lines = mwisp::geom::split_at_touches(segs);
    if (g.lines.size() > 14) return std::nullopt;
    for (std::size_t i = 0; i < g.lines.size(); ++i) g.cost.push_back(Rational(rng.uniform(0, 3)));
    // Euler: bounded faces = E - V + 1.
    std::set<Point> vs;
    for (const auto& l : g.lines) {
        vs.insert(l.a);
        vs.insert(l.b);
    }
    std::size_t faces = g.lines.size() - vs.size() + 1;
    long total = 0, heaviest = 0;
    for (std::size_t i = 0; i < faces; ++i) {
        g.face_draws.push_back(rng.uniform(0, 5));
        total += g.face_draws.back();
        heaviest = std::max(heaviest, g.face_draws.back());
    }
    if (total == 0 || 3 * heaviest > total) return std::nullopt;
    return g;
}

Instance disjoint_kgons(int n, int K, long N, std::uint64_t seed) {
    mwisp::Rng rng(seed);
    long cells = 1;
    while (cells * cells < n) ++cells;
    const long side = N / cells;
    Instance inst;
    inst.N = N;
    inst.K = K;
    for (int i = 0; i < n; ++i) {
        const long x0 = (i % cells) * side + 1, y0 = (i / cells) * side + 1, x1 = x0 + side - 2, y1 = y0 + side - 2;
        const double cx = (x0 + x1) / 2.0, cy = (y0 + y1) / 2.0;
        for (;;) {
            std::vector<std::pair<double, Point>> pts;
            for (int k = 0; k < K; ++k) {
                long x = rng.uniform(x0, x1), y = rng.uniform(y0, y1);
                pts.push_back({std::atan2(y - cy, x - cx), P(x, y)});
            }
            std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            Ring r;
            for (const auto& p : pts) r.push_back(p.second);
            if (!mwisp::geom::is_simple(r) || mwisp::geom::remove_collinear(r).size() != r.size()) continue;
            inst.polygons.push_back({"p" + std::to_string(i), SimplePolygon::make(r), Rational(rng.uniform(1, 100))});
            break;
        }
    }
    return inst;
}

SimplePolygon l_hexagon(long x, long y) {
    return SimplePolygon::make({P(x, y), P(x + 6, y), P(x + 6, y + 2), P(x + 2, y + 2), P(x + 2, y + 6), P(x, y + 6)});
}

Instance tall_triangle_instance() {
    Instance inst;
    inst.N = 64;
    auto add = [&](std::string id, SimplePolygon s) { inst.polygons.push_back({std::move(id), std::move(s), Rational(10)}); };
    add("tall", tri(2, 30, 62, 31, 2, 33));
    for (long k = 0; k < 14; ++k) {
        long x = 4 + 4 * k;
        add("a" + std::to_string(k), tri(x, 40, x + 2, 41, x + 1, 44));
        add("b" + std::to_string(k), tri(x, 14, x + 2, 13, x + 1, 17));
    }
    return inst;
}

Instance walk_instance() {
    Instance inst;
    inst.N = 64;
    inst.polygons.push_back({"A", tri(10, 10, 30, 12, 10, 14), Rational(1)});
    inst.polygons.push_back({"B", tri(20, 40, 50, 30, 50, 50), Rational(1)});
    inst.polygons.push_back({"C", tri(5, 50, 8, 60, 3, 58), Rational(1)});
    return inst;
}

mwisp::PlanarGraph graph_of(const SmallGraph& sg) {
    return mwisp::make_graph(sg.lines, sg.cost, [&](const std::vector<Region>& fs) {
        std::vector<Rational> w;
        for (std::size_t i = 0; i < fs.size(); ++i) w.push_back(Rational(sg.face_draws.at(i)));
        return w;
    });
}

DrawnSides sides_by_drawing(const mwisp::PlanarGraph& g, const mwisp::VCycle& c) {
    std::vector<bool> crossed(g.faces.size(), false);
    for (const auto& s : c.steps)
        if (s.across) crossed[s.id] = true;
    // Chords through the outer face leave the bounding square radially and
    // run counterclockwise around a box three times its size.
    Rational lo = g.vertices[0].x, hi = lo;
    for (const auto& v : g.vertices) {
        lo = std::min({lo, v.x, v.y});
        hi = std::max({hi, v.x, v.y});
    }
    const Rational mid = (lo + hi) / 2, blo = mid + 3 * (lo - mid), bhi = mid + 3 * (hi - mid), L = bhi - blo;
    auto radial = [&](const Point& p) { return Point(mid + 3 * (p.x - mid), mid + 3 * (p.y - mid)); };
    auto perim = [&](const Point& p) -> Rational {
        if (p.y == blo) return p.x - blo;
        if (p.x == bhi) return L + p.y - blo;
        if (p.y == bhi) return 2 * L + bhi - p.x;
        return 3 * L + bhi - p.y;
    };
    Ring poly;
    for (const auto& s : c.steps) {
        poly.push_back(g.vertices[s.from]);
        if (!s.across || s.id != 0) continue;
        Point a = radial(g.vertices[s.from]), b = radial(g.vertices[s.to]);
        poly.push_back(a);
        Rational ta = perim(a), tb = perim(b);
        if (tb <= ta) tb += 4 * L;
        const Point corners[4] = {Point(blo, blo), Point(bhi, blo), Point(bhi, bhi), Point(blo, bhi)};
        for (int k = 1; k <= 8; ++k) {
            Rational t = k * L;
            if (t > ta && t < tb) poly.push_back(corners[k % 4]);
        }
        poly.push_back(b);
    }
    Rational in = 0, out = 0, cr = 0;
    for (std::size_t f = 1; f < g.faces.size(); ++f) {
        if (crossed[f]) {
            cr += g.faces[f].weight;
            continue;
        }
        // just left of the middle of the first walk edge
        const auto& h = g.half[g.faces[f].walk[0]];
        const Point &a = g.vertices[h.origin], &b = g.vertices[h.target];
        Point m((a.x + b.x) / 2 - (b.y - a.y) / 1000, (a.y + b.y) / 2 + (b.x - a.x) / 1000);
        bool inside = poly.size() >= 3 && mwisp::geom::locate_in_ring(m, poly) == mwisp::geom::Location::Interior;
        (inside ? in : out) += g.faces[f].weight;
    }
    return {in, out, cr, crossed[0]};
}

}  // namespace fx
