#include "mwisp/separator.hpp"

#include "mwisp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace mwisp {

using geom::Bbox;

Rational PlanarGraph::total_weight() const {
    Rational w = 0;
    for (const auto& f : faces) w += f.weight;
    return w;
}

Rational PlanarGraph::total_cost() const {
    Rational m = 0;
    for (const auto& c : cost) m += c;
    return m;
}

PlanarGraph make_graph(const std::vector<Segment>& lines, const std::vector<Rational>& edge_cost,
                       const std::function<std::vector<Rational>(const std::vector<Region>&)>& face_weights) {
    if (edge_cost.size() != lines.size()) throw Error(ErrorCode::InternalInvariant, "one cost per line expected");
    geom::Pslg p(lines);
    if (p.component_count() != 1) throw Error(ErrorCode::DisconnectedLines, "lines are not connected");
    PlanarGraph g;
    g.vertices = p.vertices();
    g.cost = edge_cost;
    g.half.resize(2 * lines.size());
    for (std::size_t e = 0; e < lines.size(); ++e) {
        const auto& h = p.half_edges()[2 * e];
        g.ends.emplace_back(h.origin, h.target);
    }
    std::vector<Region> regions;
    for (std::size_t f = 0; f < p.face_count(); ++f) {
        const auto& walks = p.face_walks(f);
        if (walks.size() != 1) throw Error(ErrorCode::InternalInvariant, "face with several boundary walks");
        PlanarGraph::Face face;
        face.walk = walks[0];
        face.weight = 0;
        for (std::size_t k = 0; k < face.walk.size(); ++k) {
            std::size_t h = face.walk[k];
            g.half[h] = {p.half_edges()[h].origin, p.half_edges()[h].target, f, k};
        }
        g.faces.push_back(std::move(face));
        if (f > 0) regions.push_back(p.face_region(f));
    }
    auto w = face_weights(regions);
    if (w.size() != regions.size()) throw Error(ErrorCode::InternalInvariant, "one weight per bounded face expected");
    for (std::size_t f = 1; f < g.faces.size(); ++f) g.faces[f].weight = w[f - 1];
    long euler = static_cast<long>(g.vertices.size()) - static_cast<long>(g.ends.size()) +
                 static_cast<long>(g.faces.size());
    if (euler != 2) throw Error(ErrorCode::InternalInvariant, "Euler characteristic is not 2");
    return g;
}

PlanarGraph build_graph(const Subdivision& sub, const TriangleSet& ts) {
    std::vector<Rational> cost;
    for (const auto& s : sub.L) {
        Rational c = 0;
        Bbox sb = Bbox::of(s.a, s.b);
        for (const auto& t : ts.triangles)
            if (sb.overlaps(t.shape.bbox()) && geom::segment_touches_polygon(s, t.shape)) c += t.weight;
        cost.push_back(c);
    }
    auto weights = [&](const std::vector<Region>& faces) {
        std::vector<Rational> w(faces.size(), Rational(0));
        for (const auto& t : ts.triangles) {
            Region tr = Region::from_polygon(t.shape);
            Bbox tb = t.shape.bbox();
            std::vector<std::size_t> hit;
            for (std::size_t f = 0; f < faces.size(); ++f)
                if (faces[f].bbox().overlaps(tb) && geom::regions_touch(faces[f], tr)) hit.push_back(f);
            for (auto f : hit) w[f] += t.weight / static_cast<long>(hit.size());
        }
        return w;
    };
    return make_graph(sub.L, cost, weights);
}

std::vector<Point> VCycle::points(const PlanarGraph& g) const {
    std::vector<Point> pts;
    for (const auto& s : steps) pts.push_back(g.vertices[s.from]);
    return pts;
}

namespace {

struct Dsu {
    std::vector<std::size_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

[[noreturn]] void bad_cycle(const std::string& why) { throw Error(ErrorCode::InternalInvariant, "invalid V-cycle: " + why); }

}  // namespace

void evaluate_cycle(const PlanarGraph& g, VCycle& c) {
    const std::size_t F = g.faces.size();
    if (c.steps.empty()) bad_cycle("empty");
    std::vector<char> seen_v(g.vertices.size(), 0), on_cycle(g.edge_count(), 0);
    std::vector<std::size_t> cross_in(F, SIZE_MAX), cross_out(F, SIZE_MAX);
    std::size_t nodes = 0;
    c.face_edges = 0;
    c.ordinary_cost = 0;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& s = c.steps[i];
        if (s.to != c.steps[(i + 1) % c.steps.size()].from) bad_cycle("steps do not connect");
        if (seen_v[s.from]++) bad_cycle("vertex repeated");
        ++nodes;
        if (s.across) {
            if (s.id == 0 && F == 0) bad_cycle("no faces");
            if (cross_in[s.id] != SIZE_MAX) bad_cycle("face crossed twice");
            const auto& walk = g.faces[s.id].walk;
            if (s.corner_in == s.corner_out || s.corner_in >= walk.size() || s.corner_out >= walk.size())
                bad_cycle("bad corners");
            if (g.half[walk[s.corner_in]].origin != s.from || g.half[walk[s.corner_out]].origin != s.to)
                bad_cycle("corners do not match the step");
            cross_in[s.id] = s.corner_in;
            cross_out[s.id] = s.corner_out;
            ++c.face_edges;
            ++nodes;
        } else {
            auto [a, b] = g.ends[s.id];
            if (!((a == s.from && b == s.to) || (b == s.from && a == s.to))) bad_cycle("edge does not match the step");
            if (on_cycle[s.id]++) bad_cycle("edge repeated");
            c.ordinary_cost += g.cost[s.id];
        }
    }
    if (nodes < 3) bad_cycle("fewer than three nodes");

    // Node per face side: f for arc A (or the whole face), F + f for arc B.
    auto node = [&](std::size_t h) {
        const auto& he = g.half[h];
        std::size_t f = he.face;
        if (cross_in[f] == SIZE_MAX) return f;
        std::size_t L = g.faces[f].walk.size();
        std::size_t off = (he.pos + L - cross_in[f]) % L, len = (cross_out[f] + L - cross_in[f]) % L;
        return off < len ? f : F + f;
    };
    Dsu d(2 * F);
    std::vector<std::pair<std::size_t, std::size_t>> opposite;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = node(2 * e), b = node(2 * e + 1);
        if (on_cycle[e])
            opposite.emplace_back(a, b);
        else
            d.unite(a, b);
    }
    for (std::size_t f = 0; f < F; ++f)
        if (cross_in[f] != SIZE_MAX) opposite.emplace_back(f, F + f);

    std::vector<std::vector<std::size_t>> adj(2 * F);
    for (auto [a, b] : opposite) {
        std::size_t x = d.find(a), y = d.find(b);
        if (x == y) bad_cycle("not a closed Jordan curve");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::size_t ext = d.find(0);
    std::vector<int> color(2 * F, -1);
    color[ext] = 0;
    std::deque<std::size_t> q{ext};
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (auto y : adj[x]) {
            if (color[y] == -1) {
                color[y] = 1 - color[x];
                q.push_back(y);
            } else if (color[y] == color[x]) {
                bad_cycle("sides are inconsistent");
            }
        }
    }
    c.interior = c.exterior = c.crossed = 0;
    c.side.assign(F, FaceSide::Exterior);
    for (std::size_t f = 0; f < F; ++f) {
        if (cross_in[f] != SIZE_MAX) {
            c.crossed += g.faces[f].weight;
            c.side[f] = FaceSide::Crossed;
            continue;
        }
        int col = color[d.find(f)];
        if (col == -1) bad_cycle("face on no side");
        (col == 0 ? c.exterior : c.interior) += g.faces[f].weight;
        if (col == 1) c.side[f] = FaceSide::Interior;
    }
}

bool is_balanced(const PlanarGraph& g, const VCycle& c, bool strong) {
    Rational lim = 2 * g.total_weight() / 3;
    Rational extra = strong ? c.crossed : Rational(0);
    return c.interior + extra <= lim && c.exterior + extra <= lim;
}

namespace {

// Auxiliary graph: vertex nodes 0..V-1, face nodes V..V+F-1. A corner edge
// joins a vertex to a face it bounds; two corner edges through a face node
// form one face edge of a V-cycle.
struct Aux {
    struct Edge {
        std::size_t u, v;
        bool corner;
        std::size_t id, pos;  // edge id, or face id and walk position
    };
    std::size_t V = 0, n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> inc;

    explicit Aux(const PlanarGraph& g) : V(g.vertices.size()), n(g.vertices.size() + g.faces.size()) {
        inc.assign(n, {});
        for (std::size_t e = 0; e < g.edge_count(); ++e) add({g.ends[e].first, g.ends[e].second, false, e, 0});
        for (std::size_t f = 0; f < g.faces.size(); ++f)
            for (std::size_t k = 0; k < g.faces[f].walk.size(); ++k)
                add({g.half[g.faces[f].walk[k]].origin, V + f, true, f, k});
    }
    void add(Edge e) {
        inc[e.u].push_back(edges.size());
        inc[e.v].push_back(edges.size());
        edges.push_back(e);
    }
    std::size_t other(std::size_t e, std::size_t x) const { return edges[e].u == x ? edges[e].v : edges[e].u; }
};

// Closed walk in the auxiliary graph, as (node, edge to next node) pairs.
using AuxCycle = std::vector<std::pair<std::size_t, std::size_t>>;

std::optional<VCycle> to_vcycle(const Aux& aux, const AuxCycle& cyc) {
    if (cyc.size() < 3) return std::nullopt;
    // Start at a vertex node.
    std::size_t start = 0;
    while (start < cyc.size() && cyc[start].first >= aux.V) ++start;
    if (start == cyc.size()) return std::nullopt;
    VCycle c;
    const std::size_t m = cyc.size();
    for (std::size_t i = 0; i < m;) {
        auto [u, e] = cyc[(start + i) % m];
        const auto& E = aux.edges[e];
        if (!E.corner) {
            c.steps.push_back({false, E.id, u, aux.other(e, u), 0, 0});
            i += 1;
        } else {
            auto [f, e2] = cyc[(start + i + 1) % m];
            const auto& E2 = aux.edges[e2];
            c.steps.push_back({true, E.id, u, aux.other(e2, f), E.pos, E2.pos});
            i += 2;
        }
    }
    return c;
}

// Node sequence rotated to its smallest node, read in the smaller direction.
std::vector<std::size_t> canonical(const AuxCycle& cyc) {
    std::vector<std::size_t> n;
    for (auto& x : cyc) n.push_back(x.first);
    auto it = std::min_element(n.begin(), n.end());
    std::rotate(n.begin(), it, n.end());
    std::vector<std::size_t> r(n.rbegin(), n.rend());
    std::rotate(r.begin(), r.end() - 1, r.end());
    return std::min(n, r);
}

struct Best {
    const PlanarGraph& g;
    std::size_t kbar;
    bool strong;
    std::optional<VCycle> cycle;
    std::vector<std::size_t> key;
    std::set<std::vector<std::size_t>> seen;

    Rational heavy(const VCycle& c) const { return std::max(c.interior, c.exterior) + (strong ? c.crossed : Rational(0)); }

    void offer(const Aux& aux, const AuxCycle& cyc) {
        auto k = canonical(cyc);
        if (!seen.insert(k).second) return;
        auto c = to_vcycle(aux, cyc);
        if (!c) return;
        std::size_t faces = 0;
        Rational cost = 0;
        for (const auto& s : c->steps) {
            if (s.across)
                ++faces;
            else
                cost += g.cost[s.id];
        }
        if (faces > kbar) return;
        if (cycle && cost > cycle->ordinary_cost) return;
        evaluate_cycle(g, *c);
        if (!is_balanced(g, *c, strong)) return;
        if (cycle) {
            int by_cost = cmp(c->ordinary_cost, cycle->ordinary_cost);
            if (by_cost > 0) return;
            if (by_cost == 0) {
                int by_side = cmp(heavy(*c), heavy(*cycle));
                if (by_side > 0) return;
                if (by_side == 0) {
                    if (c->face_edges > cycle->face_edges) return;
                    if (c->face_edges == cycle->face_edges && !(k < key)) return;
                }
            }
        }
        cycle = std::move(c);
        key = std::move(k);
    }
};

// Shortest-path tree (Dijkstra on doubles) restricted by `use`; returns the
// parent edge of each node (SIZE_MAX for the root and unreached nodes).
std::vector<std::size_t> tree(const Aux& aux, std::size_t root, const std::vector<double>& len,
                              const std::vector<char>& use) {
    std::vector<double> dist(aux.n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> par(aux.n, SIZE_MAX);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[root] = 0;
    pq.push({0, root});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d > dist[x]) continue;
        for (auto e : aux.inc[x]) {
            if (!use[e]) continue;
            std::size_t y = aux.other(e, x);
            double nd = d + len[e];
            if (nd < dist[y]) {
                dist[y] = nd;
                par[y] = e;
                pq.push({nd, y});
            }
        }
    }
    return par;
}

void fundamental_cycles(const Aux& aux, std::size_t root, const std::vector<std::size_t>& par,
                        const std::vector<char>& use, Best& best) {
    std::vector<std::size_t> depth(aux.n, SIZE_MAX);
    depth[root] = 0;
    // Depths in an order where parents come first.
    std::vector<std::size_t> order{root};
    std::vector<std::vector<std::size_t>> kids(aux.n);
    for (std::size_t x = 0; x < aux.n; ++x)
        if (par[x] != SIZE_MAX) kids[aux.other(par[x], x)].push_back(x);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto y : kids[order[i]]) {
            depth[y] = depth[order[i]] + 1;
            order.push_back(y);
        }
    for (std::size_t e = 0; e < aux.edges.size(); ++e) {
        if (!use[e]) continue;
        std::size_t a = aux.edges[e].u, b = aux.edges[e].v;
        if (depth[a] == SIZE_MAX || depth[b] == SIZE_MAX) continue;
        if (par[a] == e || par[b] == e) continue;
        // Climb to the common ancestor.
        std::vector<std::pair<std::size_t, std::size_t>> up_a, up_b;
        std::size_t x = a, y = b;
        while (depth[x] > depth[y]) {
            up_a.push_back({x, par[x]});
            x = aux.other(par[x], x);
        }
        while (depth[y] > depth[x]) {
            up_b.push_back({y, par[y]});
            y = aux.other(par[y], y);
        }
        while (x != y) {
            up_a.push_back({x, par[x]});
            x = aux.other(par[x], x);
            up_b.push_back({y, par[y]});
            y = aux.other(par[y], y);
        }
        // Cycle: a -> ... -> lca -> ... -> b -> a.
        AuxCycle cyc = up_a;
        std::size_t lca = x;
        std::vector<std::pair<std::size_t, std::size_t>> down;
        for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) down.push_back(*it);
        // From lca step down along b's path: node lca with edge to first of down.
        std::size_t cur = lca;
        for (auto& [node, pe] : down) {
            cyc.push_back({cur, pe});
            cur = node;
        }
        cyc.push_back({cur, e});
        best.offer(aux, cyc);
    }
}

std::vector<std::size_t> pick_roots(std::size_t n, std::size_t count) {
    std::vector<std::size_t> r;
    if (n == 0) return r;
    count = std::min(count, n);
    for (std::size_t i = 0; i < count; ++i) r.push_back(i * n / count);
    return r;
}

// A path of ordinary edges between two corners of a face, closed by one face
// edge through it.
void face_chords(const Aux& aux, const PlanarGraph& g, const std::vector<double>& len, const std::vector<char>& ordinary,
                 std::size_t sources, Best& best) {
    std::vector<std::size_t> corner_edge;  // aux edge of each (face, position), flattened
    std::vector<std::size_t> first(g.faces.size() + 1, 0);
    for (std::size_t f = 0; f < g.faces.size(); ++f) first[f + 1] = first[f] + g.faces[f].walk.size();
    corner_edge.resize(first.back());
    for (std::size_t e = 0; e < aux.edges.size(); ++e)
        if (aux.edges[e].corner) corner_edge[first[aux.edges[e].id] + aux.edges[e].pos] = e;
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        const std::size_t w = g.faces[f].walk.size();
        const std::size_t fn = aux.V + f;
        for (auto i : pick_roots(w, sources)) {
            const std::size_t u = g.half[g.faces[f].walk[i]].origin;
            auto par = tree(aux, u, len, ordinary);
            for (std::size_t j = 0; j < w; ++j) {
                std::size_t v = g.half[g.faces[f].walk[j]].origin;
                if (v == u || par[v] == SIZE_MAX) continue;
                // u -> ... -> v -> f -> u
                AuxCycle cyc;
                for (std::size_t x = v; x != u;) {
                    std::size_t e = par[x];
                    std::size_t y = aux.other(e, x);
                    cyc.push_back({y, e});
                    x = y;
                }
                std::reverse(cyc.begin(), cyc.end());
                cyc.push_back({v, corner_edge[first[f] + j]});
                cyc.push_back({fn, corner_edge[first[f] + i]});
                best.offer(aux, cyc);
            }
        }
    }
}

// Boundaries of face sets grown around a root face, cheapest shared edges
// first. Each boundary is offered as is and with its most expensive edges
// replaced by steps across the outside face behind them.
void grown_regions(const Aux& aux, const PlanarGraph& g, std::size_t kbar, const std::vector<double>& len,
                   std::size_t roots, Best& best) {
    const std::size_t F = g.faces.size();
    if (F < 3) return;
    std::vector<std::size_t> first(F + 1, 0), corner_edge;
    for (std::size_t f = 0; f < F; ++f) first[f + 1] = first[f] + g.faces[f].walk.size();
    corner_edge.resize(first.back());
    for (std::size_t e = 0; e < aux.edges.size(); ++e)
        if (aux.edges[e].corner) corner_edge[first[aux.edges[e].id] + aux.edges[e].pos] = e;
    std::vector<std::size_t> ordinary_edge(g.edge_count());
    for (std::size_t e = 0; e < aux.edges.size(); ++e)
        if (!aux.edges[e].corner) ordinary_edge[aux.edges[e].id] = e;
    const Rational W = g.total_weight();

    for (auto r0 : pick_roots(F - 1, roots)) {
        const std::size_t root = r0 + 1;
        std::vector<char> in(F, 0);
        std::vector<double> dist(F, std::numeric_limits<double>::infinity());
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[root] = 0;
        pq.push({0, root});
        Rational inside = 0;
        while (!pq.empty()) {
            auto [dd, f] = pq.top();
            pq.pop();
            if (in[f] || dd > dist[f]) continue;
            in[f] = 1;
            inside += g.faces[f].weight;
            if (3 * inside > 2 * W) break;
            for (auto h : g.faces[f].walk) {
                std::size_t o = g.half[h ^ 1].face;
                double nd = dd + len[ordinary_edge[h / 2]];
                if (o != 0 && !in[o] && nd < dist[o]) {
                    dist[o] = nd;
                    pq.push({nd, o});
                }
            }
            // Boundary half-edges, with the region on their left.
            std::vector<std::size_t> next(g.vertices.size(), SIZE_MAX);
            std::size_t count = 0, start = SIZE_MAX;
            bool simple = true;
            for (std::size_t h = 0; h < g.half.size() && simple; ++h) {
                if (!in[g.half[h].face] || in[g.half[h ^ 1].face]) continue;
                if (next[g.half[h].origin] != SIZE_MAX) simple = false;
                next[g.half[h].origin] = h;
                start = h;
                ++count;
            }
            if (!simple || count < 3) continue;
            AuxCycle cyc;
            std::vector<std::size_t> hs;
            for (std::size_t h = start;;) {
                hs.push_back(h);
                h = next[g.half[h].target];
                if (h == SIZE_MAX) break;
                if (h == start) break;
            }
            if (hs.size() != count) continue;
            for (auto h : hs) cyc.push_back({g.half[h].origin, ordinary_edge[h / 2]});
            best.offer(aux, cyc);
            if (kbar == 0) continue;
            // Replace the costliest edges, one outside face each.
            std::vector<std::size_t> order(hs.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return g.cost[hs[a] / 2] > g.cost[hs[b] / 2]; });
            std::vector<char> swap(hs.size(), 0), used(F, 0);
            std::size_t swaps = 0;
            for (auto i : order) {
                if (swaps == kbar || sgn(g.cost[hs[i] / 2]) == 0) break;
                const auto& out = g.half[hs[i] ^ 1];
                if (used[out.face]) continue;
                used[out.face] = 1;
                swap[i] = 1;
                ++swaps;
                AuxCycle v;
                for (std::size_t k = 0; k < hs.size(); ++k) {
                    const std::size_t h = hs[k];
                    if (!swap[k]) {
                        v.push_back({g.half[h].origin, ordinary_edge[h / 2]});
                        continue;
                    }
                    // h runs origin -> target; its twin runs target -> origin in the outside face.
                    const auto& t = g.half[h ^ 1];
                    const std::size_t L = g.faces[t.face].walk.size();
                    v.push_back({g.half[h].origin, corner_edge[first[t.face] + (t.pos + 1) % L]});
                    v.push_back({aux.V + t.face, corner_edge[first[t.face] + t.pos]});
                }
                best.offer(aux, v);
            }
        }
    }
}

}  // namespace

VCycle find_separator(const PlanarGraph& g, std::size_t kbar, const SeparatorOptions& opt) {
    Aux aux(g);
    Best best{g, kbar, opt.strong, std::nullopt, {}, {}};
    const Rational M = g.total_cost();
    const double scale = sgn(M) > 0 ? 2.0 * static_cast<double>(std::max<std::size_t>(kbar, 1)) / geom::to_double(M) : 0.0;

    const std::size_t E = aux.edges.size();
    std::vector<char> all(E, 1), corners(E, 0), ordinary(E, 0);
    std::vector<double> mixed(E), hops(E, 1.0), cheap(E);
    for (std::size_t e = 0; e < E; ++e) {
        const auto& ed = aux.edges[e];
        (ed.corner ? corners : ordinary)[e] = 1;
        double c = ed.corner ? 0.0 : geom::to_double(g.cost[ed.id]);
        mixed[e] = 1.0 + scale * c;
        cheap[e] = 1e-3 + c;
    }
    struct Family {
        const std::vector<char>* use;
        const std::vector<double>* len;
    };
    // Cheap lengths with seeded jitter, to reach other paths of equal cost.
    std::vector<std::vector<double>> jitter(3, cheap);
    Rng rng(0x5e9a);
    for (auto& j : jitter)
        for (auto& x : j) x += 1e-3 * static_cast<double>(rng.uniform(0, 1000));
    std::vector<Family> fams{{&all, &mixed}, {&ordinary, &mixed}, {&all, &hops}, {&all, &cheap}};
    for (const auto& j : jitter) fams.push_back({&all, &j});
    if (kbar > 0) fams.push_back({&corners, &hops});
    for (const auto& fam : fams)
        for (auto r : pick_roots(aux.n, opt.roots)) {
            auto par = tree(aux, r, *fam.len, *fam.use);
            fundamental_cycles(aux, r, par, *fam.use, best);
        }
    grown_regions(aux, g, kbar, cheap, opt.roots, best);
    if (kbar > 0) {
        face_chords(aux, g, cheap, ordinary, opt.roots, best);
        for (const auto& j : jitter) face_chords(aux, g, j, ordinary, opt.roots, best);
    }
    if (!best.cycle) throw Error(ErrorCode::NoBalancedCycle, "no balanced V-cycle among the candidates");
    VCycle c = std::move(*best.cycle);
    c.c_sep = sgn(M) > 0 ? geom::to_double(c.ordinary_cost) * static_cast<double>(kbar) / geom::to_double(M) : 0.0;
    return c;
}

VCycle exhaustive_separator(const PlanarGraph& g, std::size_t kbar, bool strong, std::size_t cap) {
    if (g.edge_count() > cap) throw Error(ErrorCode::CapExceeded, "graph has more edges than the cap");
    Aux aux(g);
    Best best{g, kbar, strong, std::nullopt, {}, {}};
    std::vector<char> on(aux.n, 0);
    AuxCycle path;
    // Simple cycles whose smallest node is s.
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t s, std::size_t x) {
        for (auto e : aux.inc[x]) {
            if (!path.empty() && path.back().second == e) continue;
            std::size_t y = aux.other(e, x);
            if (y == s) {
                path.push_back({x, e});
                best.offer(aux, path);
                path.pop_back();
                continue;
            }
            if (y < s || on[y]) continue;
            on[y] = 1;
            path.push_back({x, e});
            dfs(s, y);
            path.pop_back();
            on[y] = 0;
        }
    };
    for (std::size_t s = 0; s < aux.n; ++s) {
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
    if (!best.cycle) throw Error(ErrorCode::NoBalancedCycle, "no balanced V-cycle exists");
    VCycle c = std::move(*best.cycle);
    const Rational M = g.total_cost();
    c.c_sep = sgn(M) > 0 ? geom::to_double(c.ordinary_cost) * static_cast<double>(kbar) / geom::to_double(M) : 0.0;
    return c;
}

std::string vcycle_to_json(const PlanarGraph& g, const VCycle& c) {
    using json = nlohmann::ordered_json;
    json j;
    json steps = json::array();
    for (const auto& s : c.steps) {
        json js;
        js["kind"] = s.across ? "face" : "edge";
        js["id"] = s.id;
        const Point& p = g.vertices[s.from];
        js["from"] = json::array({p.x.get_str(), p.y.get_str()});
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["face_edges"] = c.face_edges;
    j["ordinary_cost"] = c.ordinary_cost.get_str();
    j["interior"] = c.interior.get_str();
    j["exterior"] = c.exterior.get_str();
    j["crossed"] = c.crossed.get_str();
    j["total_weight"] = g.total_weight().get_str();
    j["total_cost"] = g.total_cost().get_str();
    return j.dump(2) + "\n";
}

}  // namespace mwisp
