#include "mwisp/partition.hpp"

#include "mwisp/dp_points.hpp"
#include "mwisp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mwisp {

using geom::Bbox;
using geom::orientation_sign;

namespace {

Rational y_at(const Segment& s, const Rational& x) {
    if (s.a.x == s.b.x) return s.a.y;
    return s.a.y + (s.b.y - s.a.y) * (x - s.a.x) / (s.b.x - s.a.x);
}

void check_delta(const Rational& delta) {
    if (sgn(delta) <= 0 || delta >= Rational(1, 3)) throw Error(ErrorCode::InvalidInput, "delta must lie in (0, 1/3)");
}

Rational pow(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Open quadrilateral with vertical sides at x0 < x1; collapsed corners are dropped.
SimplePolygon quad(const Rational& x0, const Rational& x1, const Rational& bl, const Rational& tl, const Rational& br,
                   const Rational& tr) {
    Ring r;
    r.emplace_back(x0, bl);
    r.emplace_back(x1, br);
    if (tr != br) r.emplace_back(x1, tr);
    if (tl != bl) r.emplace_back(x0, tl);
    return SimplePolygon::make_unchecked(std::move(r));
}

}  // namespace

TriangleSet TriangleSet::from_instance(const Instance& inst) {
    TriangleSet ts;
    ts.N = Rational(inst.N);
    ts.total = 0;
    for (const auto& p : inst.polygons) {
        if (p.shape.size() != 3) throw Error(ErrorCode::InvalidInput, "polygon " + p.id + " is not a triangle");
        ts.triangles.push_back(p);
        ts.total += p.weight;
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (geom::polygons_touch(ts.shape(i), ts.shape(j)))
                throw Error(ErrorCode::InvalidInput,
                            "triangles " + ts.triangles[i].id + " and " + ts.triangles[j].id + " touch");
    return ts;
}

Instance TriangleSet::to_instance() const {
    Instance inst;
    inst.N = N.get_num() / N.get_den();
    inst.K = 3;
    inst.polygons = triangles;
    return inst;
}

SimplePolygon Cell::polygon() const { return quad(x0, x1, y1L, y2L, y1R, y2R); }

std::vector<Stripe> build_stripes(const TriangleSet& ts, const Rational& delta) {
    check_delta(delta);
    // Corner weight per distinct x-coordinate.
    std::map<Rational, Rational> at;
    for (const auto& t : ts.triangles)
        for (const auto& v : t.shape.vertices()) at[v.x] += t.weight / 3;
    const Rational limit = delta * delta * ts.total;

    std::vector<Stripe> out;
    Rational x0 = 0;
    auto it = at.upper_bound(x0);
    while (true) {
        // Weight of (x0, N).
        Rational rest = 0;
        for (auto j = it; j != at.end() && j->first < ts.N; ++j) rest += j->second;
        if (rest < limit || sgn(ts.total) == 0) {
            out.push_back({out.size(), x0, ts.N, rest});
            break;
        }
        Rational acc = 0, open = 0;
        Rational x1;
        for (; it != at.end(); ++it) {
            open = acc;
            acc += it->second;
            if (acc >= limit) {
                x1 = it->first;
                ++it;
                break;
            }
        }
        out.push_back({out.size(), x0, x1, open});
        if (x1 == ts.N) break;
        x0 = x1;
    }
    return out;
}

std::vector<EdgeRef> crossing_edges(const TriangleSet& ts, const Stripe& s) {
    std::vector<EdgeRef> e;
    for (std::size_t t = 0; t < ts.size(); ++t)
        for (std::size_t k = 0; k < 3; ++k) {
            Segment seg = ts.shape(t).edge(k).normalized();
            if (seg.a.x <= s.x0 && seg.b.x >= s.x1) e.push_back({t, k, seg});
        }
    const Rational mid = (s.x0 + s.x1) / 2;
    std::sort(e.begin(), e.end(), [&](const EdgeRef& a, const EdgeRef& b) {
        int c = cmp(y_at(a.seg, mid), y_at(b.seg, mid));
        if (c != 0) return c > 0;
        return std::make_pair(a.tri, a.edge) < std::make_pair(b.tri, b.edge);
    });
    return e;
}

Rational touched_weight(const TriangleSet& ts, const SimplePolygon& area) {
    Rational w = 0;
    Bbox box = area.bbox();
    for (const auto& t : ts.triangles)
        if (box.overlaps(t.shape.bbox()) && geom::polygons_touch(area, t.shape)) w += t.weight;
    return w;
}

StripeCells build_cells(const Stripe& s, const TriangleSet& ts, const Rational& delta) {
    check_delta(delta);
    StripeCells sc;
    sc.crossing = crossing_edges(ts, s);
    const Rational limit = pow(delta, 4) * ts.total;
    const auto& E = sc.crossing;
    const std::size_t m = E.size();

    // Line j in 0..m+1: 0 is the top of I, m+1 the bottom, others E[j-1].
    auto yl = [&](std::size_t j) { return j == 0 ? ts.N : j == m + 1 ? Rational(0) : y_at(E[j - 1].seg, s.x0); };
    auto yr = [&](std::size_t j) { return j == 0 ? ts.N : j == m + 1 ? Rational(0) : y_at(E[j - 1].seg, s.x1); };
    auto between = [&](std::size_t hi, std::size_t lo) {
        return touched_weight(ts, quad(s.x0, s.x1, yl(lo), yl(hi), yr(lo), yr(hi)));
    };

    std::vector<std::size_t> sel;
    if (m > 0 && between(0, m + 1) > limit) {
        std::size_t up = 0;
        while (true) {
            std::size_t pick = up + 1;
            for (std::size_t j = up + 1; j <= m; ++j) {
                if (between(up, j) <= limit)
                    pick = j;
                else
                    break;
            }
            sel.push_back(pick);
            if (pick == m || between(pick, m + 1) <= limit) break;
            up = pick;
        }
    }
    for (auto j : sel) sc.selected.push_back(E[j - 1]);

    std::vector<std::size_t> bounds{0};
    bounds.insert(bounds.end(), sel.begin(), sel.end());
    bounds.push_back(m + 1);
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        std::size_t hi = bounds[c], lo = bounds[c + 1];
        Cell cell;
        cell.stripe = s.index;
        cell.x0 = s.x0;
        cell.x1 = s.x1;
        cell.y1L = yl(lo);
        cell.y2L = yl(hi);
        cell.y1R = yr(lo);
        cell.y2R = yr(hi);
        cell.dense = lo == hi + 1;
        cell.touched_weight = touched_weight(ts, cell.polygon());
        sc.cells.push_back(std::move(cell));
    }
    return sc;
}

namespace {

struct Walker {
    const std::vector<StripeCells>& cells;
    const std::set<Segment>& l0;
    const Rational& N;
    std::vector<Rational> xs;  // x_0 .. x_{i*}
    std::vector<Segment>& out;

    void add(const Point& a, const Point& b) {
        if (a != b) out.push_back(Segment{a, b}.normalized());
    }

    // Connects the right end (dir = +1) or the left end (dir = -1) of line L.
    void walk(Segment cur, int dir) {
        std::set<Segment> seen{cur};
        while (true) {
            // Extreme stripe boundary value touched by the closed segment.
            std::size_t i = 0;
            bool found = false;
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (cur.a.x <= xs[j] && xs[j] <= cur.b.x) {
                    if (dir > 0 || !found) i = j;
                    found = true;
                }
            if (!found) throw Error(ErrorCode::WalkDiverged, "line touches no stripe boundary");
            Point p(xs[i], y_at(cur, xs[i]));
            if (dir > 0 && (i + 1 == xs.size() || p.y == N)) return;
            if (dir < 0 && (i == 0 || sgn(p.y) == 0)) return;
            // Stripe on the far side of x_i.
            const auto& E = cells[dir > 0 ? i : i - 1].crossing;
            for (const auto& e : E)
                if (l0.count(e.seg) && y_at(e.seg, xs[i]) == p.y) return;
            const EdgeRef* best = nullptr;
            Rational by;
            for (const auto& e : E) {
                Rational y = y_at(e.seg, xs[i]);
                bool ok = dir > 0 ? y >= p.y : y <= p.y;
                if (!ok) continue;
                bool better = !best || (dir > 0 ? y < by : y > by);
                if (better) {
                    best = &e;
                    by = y;
                }
            }
            if (!best) {
                add(p, Point(xs[i], dir > 0 ? N : Rational(0)));
                return;
            }
            // Among lines through the same point prefer one from L0.
            for (const auto& e : E)
                if (y_at(e.seg, xs[i]) == by && l0.count(e.seg)) best = &e;
            Point q(xs[i], by);
            add(p, q);
            if (l0.count(best->seg) || (dir > 0 ? q.y == N : sgn(q.y) == 0)) return;
            if (!seen.insert(best->seg).second) throw Error(ErrorCode::WalkDiverged, "walk revisits a line");
            out.push_back(best->seg);
            cur = best->seg;
        }
    }
};

}  // namespace

std::vector<Segment> build_lext(const std::vector<Stripe>& stripes, const std::vector<StripeCells>& cells,
                                const std::vector<Segment>& L0, const TriangleSet& ts) {
    const Rational& N = ts.N;
    std::vector<Segment> out;
    Point c00(0, 0), c10(N, Rational(0)), c11(N, N), c01(Rational(0), N);
    out.push_back(Segment{c00, c10});
    out.push_back(Segment{c10, c11}.normalized());
    out.push_back(Segment{c01, c11});
    out.push_back(Segment{c00, c01});
    for (const auto& sc : cells)
        for (const auto& c : sc.cells) {
            if (!c.dense) continue;
            if (c.y1L != c.y2L) out.push_back(Segment{Point(c.x0, c.y1L), Point(c.x0, c.y2L)});
            if (c.y1R != c.y2R) out.push_back(Segment{Point(c.x1, c.y1R), Point(c.x1, c.y2R)});
        }
    std::set<Segment> l0(L0.begin(), L0.end());
    Walker w{cells, l0, N, {}, out};
    w.xs.push_back(stripes.front().x0);
    for (const auto& s : stripes) w.xs.push_back(s.x1);
    for (const auto& line : L0) {
        w.walk(line, +1);
        w.walk(line, -1);
    }
    // Merge collinear overlaps; lines touching only at a point stay apart.
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < out.size() && !changed; ++j) {
                const Segment &s = out[i], &t = out[j];
                if (orientation_sign(s.a, s.b, t.a) != 0 || orientation_sign(s.a, s.b, t.b) != 0) continue;
                auto x = geom::segment_intersection(s, t);
                if (!std::holds_alternative<Segment>(x)) continue;
                Segment u{std::min(s.a, t.a), std::max(s.b, t.b)};
                out.erase(out.begin() + static_cast<long>(j));
                out[i] = u;
                changed = true;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> owned_triangles(const std::vector<StripeCells>& cells, const TriangleSet& ts) {
    std::set<std::size_t> own;
    for (const auto& sc : cells)
        for (const auto& c : sc.cells) {
            if (!c.dense) continue;
            SimplePolygon q = c.polygon();
            for (std::size_t t = 0; t < ts.size(); ++t) {
                bool inside = true;
                for (const auto& v : q.vertices())
                    if (geom::locate_in_ring(v, ts.shape(t).vertices()) == geom::Location::Exterior) {
                        inside = false;
                        break;
                    }
                if (inside) own.insert(t);
            }
        }
    return {own.begin(), own.end()};
}

std::vector<Segment> clip_outside(const Segment& s, const SimplePolygon& convex) {
    // Parameter interval [lo, hi] of s inside the closed polygon.
    Rational lo = 0, hi = 1;
    const std::size_t n = convex.size();
    for (std::size_t i = 0; i < n && lo <= hi; ++i) {
        Segment e = convex.edge(i);
        Rational f0 = geom::cross(e.a, e.b, s.a), f1 = geom::cross(e.a, e.b, s.b);
        // f(t) = f0 + t (f1 - f0) >= 0
        Rational d = f1 - f0;
        if (sgn(d) == 0) {
            if (sgn(f0) < 0) return {s};
            continue;
        }
        Rational t = -f0 / d;
        if (sgn(d) > 0)
            lo = std::max(lo, t);
        else
            hi = std::min(hi, t);
    }
    if (lo >= hi) return {s};
    auto at = [&](const Rational& t) { return Point(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)); };
    Point m = at((lo + hi) / 2);
    if (geom::locate_in_ring(m, convex.vertices()) != geom::Location::Interior) return {s};
    std::vector<Segment> out;
    if (sgn(lo) > 0) out.push_back({s.a, at(lo)});
    if (hi < 1) out.push_back({at(hi), s.b});
    return out;
}

Subdivision cut_out_owned(Subdivision sub, const TriangleSet& ts) {
    sub.owned = owned_triangles(sub.cells, ts);
    std::vector<Segment> lp;
    for (auto t : sub.owned)
        for (std::size_t k = 0; k < 3; ++k) lp.push_back(ts.shape(t).edge(k).normalized());
    std::vector<Segment> all = sub.L0;
    all.insert(all.end(), sub.Lext.begin(), sub.Lext.end());
    for (const auto& line : all) {
        std::vector<Segment> parts{line};
        for (auto t : sub.owned) {
            std::vector<Segment> next;
            for (const auto& p : parts) {
                if (!Bbox::of(p.a, p.b).overlaps(ts.shape(t).bbox())) {
                    next.push_back(p);
                    continue;
                }
                auto c = clip_outside(p, ts.shape(t));
                next.insert(next.end(), c.begin(), c.end());
            }
            parts = std::move(next);
        }
        lp.insert(lp.end(), parts.begin(), parts.end());
    }
    sub.L = geom::split_at_touches(lp);
    geom::Pslg g(sub.L);
    if (g.component_count() != 1) throw Error(ErrorCode::DisconnectedLines, "subdivision lines are not connected");
    sub.faces.clear();
    for (std::size_t f = 1; f < g.face_count(); ++f) sub.faces.push_back(g.face_region(f).canonical());
    return sub;
}

Subdivision build_subdivision(const TriangleSet& ts, const Rational& delta) {
    Subdivision sub;
    sub.N = ts.N;
    sub.delta = delta;
    sub.stripes = build_stripes(ts, delta);
    std::set<Segment> l0;
    for (const auto& s : sub.stripes) {
        sub.cells.push_back(build_cells(s, ts, delta));
        for (const auto& e : sub.cells.back().selected) l0.insert(e.seg);
    }
    sub.L0.assign(l0.begin(), l0.end());
    sub.Lext = build_lext(sub.stripes, sub.cells, sub.L0, ts);
    return cut_out_owned(std::move(sub), ts);
}

namespace {

std::size_t count_touching(const std::vector<Segment>& lines, const SimplePolygon& t) {
    std::size_t c = 0;
    Bbox box = t.bbox();
    for (const auto& s : lines)
        if (Bbox::of(s.a, s.b).overlaps(box) && geom::segment_touches_polygon(s, t)) ++c;
    return c;
}

}  // namespace

PartitionAudit audit_subdivision(const Subdivision& sub, const TriangleSet& ts) {
    PartitionAudit a;
    auto fail = [&](std::string msg) {
        a.ok = false;
        a.violations.push_back(std::move(msg));
    };
    const Rational d2 = sub.delta * sub.delta;
    const Rational W = ts.total;

    a.stripe_count = sub.stripes.size();
    Rational inv = 1 / d2;
    BigInt ceil_inv = (inv.get_num() + inv.get_den() - 1) / inv.get_den();
    if (Rational(a.stripe_count) > Rational(ceil_inv)) fail("stripe count " + std::to_string(a.stripe_count) + " exceeds ceil(1/delta^2)");
    for (const auto& s : sub.stripes)
        if (!(s.weight < d2 * W) && sgn(W) > 0) fail("stripe " + std::to_string(s.index) + " too heavy");

    const Rational d4w = d2 * d2 * W;
    for (const auto& sc : sub.cells) {
        a.cell_count += sc.cells.size();
        a.max_selected = std::max(a.max_selected, sc.selected.size());
        if (Rational(sc.selected.size()) > 2 / (d2 * d2)) fail("too many selected lines in a stripe");
        for (const auto& c : sc.cells)
            if (!c.dense && c.touched_weight > d4w)
                fail("light cell in stripe " + std::to_string(c.stripe) + " touches weight " + c.touched_weight.get_str());
    }

    a.l0_count = sub.L0.size();
    a.lext_count = sub.Lext.size();
    a.l_count = sub.L.size();
    double dd = geom::to_double(sub.delta);
    a.c_l0 = static_cast<double>(a.l0_count) * std::pow(dd, 6);
    a.c_lext = static_cast<double>(a.l0_count + a.lext_count) * std::pow(dd, 8);
    if (a.c_lext > 64) fail("|L0 u Lext| above 64 / delta^8");

    // L0 never touches a triangle.
    for (const auto& s : sub.L0)
        for (const auto& t : ts.triangles)
            if (geom::segment_touches_polygon(s, t.shape)) fail("L0 line touches triangle " + t.id);

    std::vector<Segment> before = sub.L0;
    before.insert(before.end(), sub.Lext.begin(), sub.Lext.end());
    for (std::size_t t = 0; t < ts.size(); ++t) {
        a.max_crossings_before = std::max(a.max_crossings_before, count_touching(before, ts.shape(t)));
        std::size_t c = count_touching(sub.L, ts.shape(t));
        a.max_crossings = std::max(a.max_crossings, c);
        if (c > 4) fail("triangle " + ts.triangles[t].id + " touched by " + std::to_string(c) + " lines");
    }

    DpPointSet dp = basic_dp_points_unchecked(ts.to_instance());
    for (const auto* set : {&sub.L0, &sub.Lext, &sub.L})
        for (const auto& s : *set)
            for (const auto* p : {&s.a, &s.b})
                if (!dp.is_basic(*p)) fail("endpoint " + geom::to_string(*p) + " is not a basic DP-point");

    std::set<std::string> owned_keys;
    for (auto t : sub.owned) owned_keys.insert(Region::from_polygon(ts.shape(t)).key());
    a.max_face_weight = 0;
    a.area_sum = 0;
    std::vector<Region> tri_regions;
    for (const auto& t : ts.triangles) tri_regions.push_back(Region::from_polygon(t.shape));
    for (const auto& f : sub.faces) {
        a.area_sum += f.area();
        if (owned_keys.count(f.key())) continue;
        Rational w = 0;
        Bbox fb = f.bbox();
        for (std::size_t t = 0; t < ts.size(); ++t)
            if (fb.overlaps(ts.shape(t).bbox()) && geom::regions_touch(f, tri_regions[t])) w += ts.triangles[t].weight;
        a.max_face_weight = std::max(a.max_face_weight, w);
        if (w > 3 * d2 * W) fail("face touching weight " + w.get_str() + " above 3 delta^2 w(T)");
        for (const auto& sc : sub.cells) {
            int hits = 0;
            for (const auto& c : sc.cells) {
                Region cr = Region::from_polygon(c.polygon());
                if (fb.overlaps(cr.bbox()) && geom::regions_touch(f, cr)) ++hits;
            }
            if (hits > 1) fail("face touches two cells of one stripe");
        }
    }
    if (a.area_sum != sub.N * sub.N) fail("face areas do not sum to N^2");
    return a;
}

Rational delta_for(const Rational& eps, int K, std::size_t n) {
    Rational r = Rational(static_cast<long>(std::max<std::size_t>(n, 2))) / eps;
    long lg = 1;
    while (Rational(BigInt(1) << static_cast<mp_bitcnt_t>(lg)) < r) ++lg;
    return eps / (K * lg);
}

std::string subdivision_to_json(const Subdivision& sub, const TriangleSet& ts) {
    using json = nlohmann::ordered_json;
    auto pt = [](const Point& p) { return json::array({p.x.get_str(), p.y.get_str()}); };
    auto segs = [&](const std::vector<Segment>& v) {
        json a = json::array();
        for (const auto& s : v) a.push_back(json::array({pt(s.a), pt(s.b)}));
        return a;
    };
    json j;
    j["N"] = sub.N.get_str();
    j["delta"] = sub.delta.get_str();
    json st = json::array();
    for (const auto& s : sub.stripes) st.push_back(json::array({s.x0.get_str(), s.x1.get_str()}));
    j["stripes"] = st;
    json cells = json::array();
    for (const auto& sc : sub.cells)
        for (const auto& c : sc.cells) {
            json jc;
            jc["stripe"] = c.stripe;
            jc["dense"] = c.dense;
            json corners = json::array();
            auto poly = c.polygon();
            for (const auto& v : poly.vertices()) corners.push_back(pt(v));
            jc["corners"] = corners;
            cells.push_back(jc);
        }
    j["cells"] = cells;
    j["L0"] = segs(sub.L0);
    j["Lext"] = segs(sub.Lext);
    j["L"] = segs(sub.L);
    json owned = json::array();
    for (auto t : sub.owned) owned.push_back(ts.triangles[t].id);
    j["owned"] = owned;
    json faces = json::array();
    for (const auto& f : sub.faces) {
        json jf = json::array();
        for (const auto& c : f.components()) {
            json rings = json::array();
            json outer = json::array();
            for (const auto& v : c.outer) outer.push_back(pt(v));
            rings.push_back(outer);
            for (const auto& h : c.holes) {
                json hole = json::array();
                for (const auto& v : h) hole.push_back(pt(v));
                rings.push_back(hole);
            }
            jf.push_back(rings);
        }
        faces.push_back(jf);
    }
    j["faces"] = faces;
    return j.dump(2) + "\n";
}

}  // namespace mwisp
