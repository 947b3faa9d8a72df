#include "mwisp/geo_dp.hpp"

#include "mwisp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

namespace mwisp {

using geom::Location;
using geom::orientation_sign;
using geom::point_in_region;

long suggested_k(std::size_t n, const Rational& eps, int ell) {
    double x = static_cast<double>(n) * static_cast<double>(n) / geom::to_double(eps);
    long levels = static_cast<long>(std::ceil(std::log(std::max(x, 1.0)) / std::log(1.5))) + 1;
    return levels * levels * (ell + 4) * (ell + 4);
}

namespace {

using Set = std::vector<std::size_t>;

// Closed half-plane left of a -> b, clipped to the square [0, n]^2.
Ring clip_square(const Point& a, const Point& b, const Rational& n) {
    Ring sq{Point(0, 0), Point(n, Rational(0)), Point(n, n), Point(Rational(0), n)};
    Ring out;
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const Point& p = sq[i];
        const Point& q = sq[(i + 1) % sq.size()];
        int sp = orientation_sign(a, b, p), sq_ = orientation_sign(a, b, q);
        if (sp >= 0) out.push_back(p);
        if (sp * sq_ < 0) {
            auto hit = geom::segment_intersection({p, q}, {a, b});
            if (auto* x = std::get_if<Point>(&hit)) out.push_back(*x);
            else {
                // The chord endpoints lie on the square, so the crossing of the
                // full line with this side is one of them.
                out.push_back(orientation_sign(p, q, a) == 0 ? a : b);
            }
        }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return geom::remove_collinear(out);
}

struct Chord {
    Segment ab;
    Region plus, minus;
    std::size_t gamma_edges = 0;
    std::vector<int> side;  // +1 inside plus, -1 inside minus, 0 straddling
};

struct Child {
    Region region;
    Set polys;
};

struct Entry {
    Set sol;
    Rational weight = 0;
    std::string split = "leaf";
    std::vector<Child> children;
};

bool on_square_side_together(const Point& a, const Point& b, const Rational& n) {
    return (sgn(a.x) == 0 && sgn(b.x) == 0) || (a.x == n && b.x == n) || (sgn(a.y) == 0 && sgn(b.y) == 0) ||
           (a.y == n && b.y == n);
}

class Solver {
public:
    Solver(const Instance& inst, const SolverConfig& cfg) : inst_(inst), cfg_(cfg), n_(inst.N) {
        if (cfg.k < 4) throw Error(ErrorCode::InvalidInput, "k must be at least 4");
        dp_ = basic_dp_points(inst);
        const std::size_t n = inst.n();
        for (const auto& p : inst.polygons) {
            regions_.push_back(Region::from_polygon(p.shape));
            auto t = geom::triangulate(p.shape).front();
            interior_.push_back(Point((t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3));
        }
        adj_.assign(n, std::vector<bool>(n, false));
        contains_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!geom::polygons_touch(inst.polygons[i].shape, inst.polygons[j].shape)) continue;
                adj_[i][j] = adj_[j][i] = true;
                contains_[i][j] = geom::region_contains(regions_[i], regions_[j]);
                contains_[j][i] = geom::region_contains(regions_[j], regions_[i]);
            }
        build_chords();
    }

    const Entry& run(const Region& q, const Set& pq) { return eval(q, pq); }

    Set contained_in(const Region& q) const {
        Set s;
        for (std::size_t i = 0; i < inst_.n(); ++i)
            if (geom::region_contains(q, regions_[i])) s.push_back(i);
        return s;
    }

    std::vector<Split> list_splits(const Region& q, const Set& pq) {
        std::vector<Split> out;
        for (auto p : pq) {
            Split s;
            s.kind = "carve";
            s.gamma = regions_[p];
            auto rest = geom::region_subtract(q, regions_[p]).split();
            if (!fits(rest) || regions_[p].edge_count() > static_cast<std::size_t>(cfg_.k)) continue;
            s.pieces = rest;
            s.pieces.push_back(regions_[p].canonical());
            out.push_back(std::move(s));
        }
        for (const auto& c : chords_) {
            if (!admitted(c)) continue;
            auto a = geom::region_intersect(q, c.plus).split();
            auto b = geom::region_intersect(q, c.minus).split();
            if (a.empty() || b.empty() || !fits(a) || !fits(b)) continue;
            Split s;
            s.kind = "chord";
            s.gamma = c.plus.edge_count() <= c.minus.edge_count() ? c.plus : c.minus;
            s.pieces = a;
            s.pieces.insert(s.pieces.end(), b.begin(), b.end());
            out.push_back(std::move(s));
        }
        return out;
    }

    void build_trace(const Region& q, const Set& pq, int depth, Trace& trace) {
        std::size_t me = trace.nodes.size();
        trace.nodes.push_back({q, pq, {}, {}, "leaf", depth});
        if (pq.size() <= 1) {
            trace.nodes[me].chosen = pq;
            return;
        }
        auto it = memo_.find(q.key());
        Entry fallback;
        const Entry& e = it != memo_.end() ? it->second : (fallback = heaviest(pq), fallback);
        trace.nodes[me].split = e.split;
        if (e.children.empty()) {
            trace.nodes[me].chosen = e.sol;
            return;
        }
        for (const auto& c : e.children) {
            trace.nodes[me].children.push_back(trace.nodes.size());
            build_trace(c.region, c.polys, depth + 1, trace);
        }
    }

    SolveStats stats;

private:
    bool fits(const std::vector<Region>& pieces) const {
        for (const auto& r : pieces)
            if (r.edge_count() > static_cast<std::size_t>(cfg_.k)) return false;
        return true;
    }

    bool admitted(const Chord& c) const {
        if (cfg_.family == CutFamily::DpSegmentsExhaustive) return true;
        return c.gamma_edges <= static_cast<std::size_t>(cfg_.ell);
    }

    void build_chords() {
        std::vector<Point> rim;
        for (const auto& p : dp_.basic)
            if (sgn(p.x) == 0 || sgn(p.y) == 0 || p.x == n_ || p.y == n_) rim.push_back(p);
        for (std::size_t i = 0; i < rim.size(); ++i)
            for (std::size_t j = i + 1; j < rim.size(); ++j) {
                if (on_square_side_together(rim[i], rim[j], n_)) continue;
                Chord c;
                c.ab = {rim[i], rim[j]};
                Ring lp = clip_square(rim[i], rim[j], n_);
                Ring lm = clip_square(rim[j], rim[i], n_);
                if (lp.size() < 3 || lm.size() < 3) continue;
                c.plus = Region::from_ring(lp).canonical();
                c.minus = Region::from_ring(lm).canonical();
                c.gamma_edges = std::min(lp.size(), lm.size());
                for (const auto& p : inst_.polygons) {
                    bool any_pos = false, any_neg = false;
                    for (const auto& v : p.shape.vertices()) {
                        int o = orientation_sign(rim[i], rim[j], v);
                        any_pos |= o > 0;
                        any_neg |= o < 0;
                    }
                    c.side.push_back(any_pos && any_neg ? 0 : (any_neg ? -1 : 1));
                }
                chords_.push_back(std::move(c));
            }
    }

    Entry heaviest(const Set& pq) const {
        Entry e;
        e.split = "fallback";
        for (auto i : pq) {
            const auto& w = inst_.polygons[i].weight;
            if (e.sol.empty() || w > e.weight ||
                (w == e.weight && inst_.polygons[i].id < inst_.polygons[e.sol[0]].id)) {
                e.sol = {i};
                e.weight = w;
            }
        }
        return e;
    }

    // Exact optimum over a polygon set (upper bound for any split of its region).
    Rational upper_bound(const Set& s) {
        if (s.size() <= 1) return s.empty() ? Rational(0) : inst_.polygons[s[0]].weight;
        auto it = ub_cache_.find(s);
        if (it != ub_cache_.end()) return it->second;
        Rational result = 0;
        if (s.size() > 48) {
            for (auto i : s) result += inst_.polygons[i].weight;
        } else {
            Set order = s;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return inst_.polygons[a].weight > inst_.polygons[b].weight;
            });
            std::vector<std::uint64_t> clash(order.size(), 0);
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = 0; b < order.size(); ++b)
                    if (adj_[order[a]][order[b]]) clash[a] |= std::uint64_t{1} << b;
            std::vector<Rational> suffix(order.size() + 1, 0);
            for (std::size_t a = order.size(); a-- > 0;) suffix[a] = suffix[a + 1] + inst_.polygons[order[a]].weight;
            Rational best = 0;
            auto rec = [&](auto&& self, std::size_t k, std::uint64_t blocked, const Rational& cur) -> void {
                if (cur > best) best = cur;
                if (k == order.size() || cur + suffix[k] <= best) return;
                if (!(blocked >> k & 1U))
                    self(self, k + 1, blocked | clash[k], cur + inst_.polygons[order[k]].weight);
                self(self, k + 1, blocked, cur);
            };
            rec(rec, 0, 0, Rational(0));
            result = best;
        }
        ub_cache_.emplace(s, result);
        return result;
    }

    // Groups polygons by the piece that contains their interior point.
    bool distribute(const std::vector<Region>& pieces, const Set& polys, std::vector<Child>& out) const {
        std::vector<Child> children;
        for (const auto& r : pieces) children.push_back({r, {}});
        for (auto i : polys) {
            bool placed = false;
            for (auto& c : children)
                if (point_in_region(interior_[i], c.region) == Location::Interior) {
                    c.polys.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) throw Error(ErrorCode::InternalInvariant, "polygon not inside any piece");
        }
        out = std::move(children);
        return true;
    }

    void consider(Entry& best, std::vector<Child> children, const std::string& name) {
        ++stats.splits_tried;
        Rational total = 0;
        Set sol;
        for (const auto& c : children) {
            if (c.polys.empty()) continue;
            const Entry& e = eval(c.region, c.polys);
            total += e.weight;
            sol.insert(sol.end(), e.sol.begin(), e.sol.end());
        }
        if (total > best.weight) {
            std::sort(sol.begin(), sol.end());
            best.sol = std::move(sol);
            best.weight = total;
            best.split = name;
            best.children = std::move(children);
        }
    }

    const Entry& eval(const Region& q, const Set& pq) {
        std::string key = q.key();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (pq.size() <= 1) {
            Entry e;
            e.sol = pq;
            e.weight = pq.empty() ? Rational(0) : inst_.polygons[pq[0]].weight;
            return memo_.emplace(std::move(key), std::move(e)).first->second;
        }
        if (memo_.size() >= cfg_.max_cells) {
            stats.budget_exceeded = true;
            scratch_.push_back(heaviest(pq));
            return scratch_.back();
        }
        ++stats.cells_expanded;
        Entry best = heaviest(pq);
        const Rational ub = upper_bound(pq);

        for (auto p : pq) {
            if (best.weight == ub) break;
            Set rest, inside{p};
            for (auto j : pq) {
                if (j == p) continue;
                if (!adj_[p][j]) rest.push_back(j);
                else if (contains_[p][j]) inside.push_back(j);
            }
            if (rest.empty()) continue;
            if (upper_bound(rest) + upper_bound(inside) <= best.weight) continue;
            if (regions_[p].edge_count() > static_cast<std::size_t>(cfg_.k)) continue;
            auto pieces = geom::region_subtract(q, regions_[p]).split();
            if (!fits(pieces)) continue;
            std::vector<Child> children;
            distribute(pieces, rest, children);
            children.push_back({regions_[p].canonical(), inside});
            consider(best, std::move(children), "carve:" + inst_.polygons[p].id);
        }
        for (const auto& c : chords_) {
            if (best.weight == ub) break;
            if (!admitted(c)) continue;
            Set plus, minus;
            for (auto j : pq) {
                if (c.side[j] > 0) plus.push_back(j);
                else if (c.side[j] < 0) minus.push_back(j);
            }
            if (plus.empty() || minus.empty()) continue;
            if (upper_bound(plus) + upper_bound(minus) <= best.weight) continue;
            auto a = geom::region_intersect(q, c.plus).split();
            auto b = geom::region_intersect(q, c.minus).split();
            if (!fits(a) || !fits(b)) continue;
            std::vector<Child> ca, cb;
            distribute(a, plus, ca);
            distribute(b, minus, cb);
            ca.insert(ca.end(), std::make_move_iterator(cb.begin()), std::make_move_iterator(cb.end()));
            consider(best, std::move(ca),
                     "chord:" + geom::to_string(c.ab.a) + "-" + geom::to_string(c.ab.b));
        }
        return memo_.emplace(std::move(key), std::move(best)).first->second;
    }

    const Instance& inst_;
    SolverConfig cfg_;
    Rational n_;
    DpPointSet dp_;
    std::vector<Region> regions_;
    std::vector<Point> interior_;
    std::vector<std::vector<bool>> adj_, contains_;
    std::vector<Chord> chords_;
    std::unordered_map<std::string, Entry> memo_;
    std::map<Set, Rational> ub_cache_;
    std::deque<Entry> scratch_;
};

}  // namespace

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    Solver solver(inst, cfg);
    Set all(inst.n());
    std::iota(all.begin(), all.end(), 0);
    Region root = inst.square().canonical();
    const Entry& e = solver.run(root, all);
    SolveResult res;
    res.solution = make_solution(inst, e.sol);
    solver.build_trace(root, all, 0, res.trace);
    res.stats = solver.stats;
    res.stats.suggested_k = suggested_k(inst.n(), cfg.epsilon, cfg.ell);
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<Split> enumerate_splits(const Instance& inst, const Region& q, const SolverConfig& cfg) {
    Solver solver(inst, cfg);
    Region c = q.canonical();
    return solver.list_splits(c, solver.contained_in(c));
}

CertificationReport certify_trace(const Instance& inst, const Trace& trace) {
    CertificationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    auto graph = build_intersection_graph(inst);
    auto opt_of = [&](const Set& s) {
        IntersectionGraph g;
        for (auto i : s) {
            g.ids.push_back(graph.ids[i]);
            g.weights.push_back(graph.weights[i]);
        }
        g.adj.assign(s.size(), std::vector<bool>(s.size(), false));
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = 0; b < s.size(); ++b) g.adj[a][b] = graph.adj[s[a]][s[b]];
        return exact_mwis(g, 64).weight;
    };

    int max_depth = 0;
    for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
        const auto& nd = trace.nodes[i];
        max_depth = std::max(max_depth, nd.depth);
        if (nd.children.empty()) {
            if (nd.chosen.size() > 1) fail("leaf " + std::to_string(i) + " holds more than one chosen polygon");
            for (auto c : nd.chosen)
                if (!geom::region_contains(nd.region, Region::from_polygon(inst.polygons[c].shape)))
                    fail("chosen polygon " + inst.polygons[c].id + " not inside its leaf");
            continue;
        }
        Rational area = 0;
        for (std::size_t a = 0; a < nd.children.size(); ++a) {
            const auto& ra = trace.nodes[nd.children[a]].region;
            area += ra.area();
            for (std::size_t b = a + 1; b < nd.children.size(); ++b)
                if (geom::regions_touch(ra, trace.nodes[nd.children[b]].region))
                    fail("children of node " + std::to_string(i) + " overlap");
        }
        if (area != nd.region.area()) fail("children of node " + std::to_string(i) + " do not cover it");
    }

    // Retained weight per depth; leaves keep contributing below their depth.
    std::vector<Rational> retained(static_cast<std::size_t>(max_depth) + 1, 0);
    for (const auto& nd : trace.nodes) {
        Rational w = opt_of(nd.contained);
        int last = nd.children.empty() ? max_depth : nd.depth;
        for (int d = nd.depth; d <= last; ++d) retained[static_cast<std::size_t>(d)] += w;
    }
    for (std::size_t d = 1; d < retained.size(); ++d) {
        Rational r = sgn(retained[d - 1]) == 0 ? Rational(1) : retained[d] / retained[d - 1];
        rep.level_ratio.push_back(r);
        if (1 - r > rep.alpha_hat) rep.alpha_hat = 1 - r;
    }
    return rep;
}

}  // namespace mwisp
