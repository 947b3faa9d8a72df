#include "mwisp/cheap_cut.hpp"

#include "mwisp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

namespace mwisp {

using geom::Location;

namespace {

// A point of the open polygon: centroid of its first ear.
Point inner_point(const SimplePolygon& p) {
    auto ts = geom::triangulate(p);
    const auto& v = ts.front().vertices();
    return Point((v[0].x + v[1].x + v[2].x) / 3, (v[0].y + v[1].y + v[2].y) / 3);
}

struct Classifier {
    const std::vector<WeightedPolygon>& polys;
    std::vector<Point> inner;

    explicit Classifier(const std::vector<WeightedPolygon>& ps) : polys(ps) {
        for (const auto& p : ps) inner.push_back(inner_point(p.shape));
    }

    CutReport run(const SimplePolygon& gamma, const Rational& alpha, std::size_t ell) const {
        CutReport r;
        r.edges = gamma.size();
        const auto box = gamma.bbox();
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const auto& p = polys[i];
            r.total += p.weight;
            bool crossed = false;
            if (box.overlaps(p.shape.bbox()))
                for (std::size_t k = 0; k < gamma.size() && !crossed; ++k)
                    crossed = geom::segment_touches_polygon(gamma.edge(k), p.shape);
            CutSide s = CutSide::Outside;
            if (crossed)
                s = CutSide::Crossed;
            else if (geom::locate_in_ring(inner[i], gamma.vertices()) == Location::Interior)
                s = CutSide::Inside;
            r.sides.push_back(s);
            (s == CutSide::Crossed ? r.crossed : s == CutSide::Inside ? r.inside : r.outside) += p.weight;
        }
        r.alpha_observed = sgn(r.total) > 0 ? Rational(r.crossed / r.total) : Rational(0);
        r.short_enough = r.edges <= ell;
        r.cheap = r.crossed <= alpha * r.total;
        r.balanced = 3 * r.inside <= 2 * r.total && 3 * r.outside <= 2 * r.total;
        return r;
    }
};

std::optional<SimplePolygon> as_polygon(const Ring& ring) {
    Ring r = geom::remove_collinear(ring);
    if (r.size() < 3) return std::nullopt;
    try {
        return SimplePolygon::make(std::move(r));
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Better cut: passes, then less crossed weight, then lighter heavy side,
// then fewer edges.
bool better(const CutReport& a, const CutReport& b) {
    if (a.ok() != b.ok()) return a.ok();
    if (a.balanced != b.balanced) return a.balanced;
    if (a.crossed != b.crossed) return a.crossed < b.crossed;
    Rational ha = std::max(a.inside, a.outside), hb = std::max(b.inside, b.outside);
    if (ha != hb) return ha < hb;
    return a.edges < b.edges;
}

struct Candidate {
    SimplePolygon gamma;
    CutReport report;
};

void offer_rings(const PlanarGraph& g, const std::vector<char>& S, const Classifier& cls, const Rational& alpha,
                 std::size_t ell, std::optional<Candidate>& best) {
    std::vector<Segment> edges;
    for (std::size_t h = 0; h < g.half.size(); ++h)
        if (S[g.half[h].face] && !S[g.half[h ^ 1].face])
            edges.push_back({g.vertices[g.half[h].origin], g.vertices[g.half[h].target]});
    if (edges.empty()) return;
    Region r = geom::assemble_region(edges);
    for (const auto& comp : r.components()) {
        auto p = as_polygon(comp.outer);
        if (!p) continue;
        auto rep = cls.run(*p, alpha, ell);
        if (!best || better(rep, best->report)) best = Candidate{*p, std::move(rep)};
    }
}

// Every simple outer ring of the union of the faces in S, and of the
// bounded faces not in S.
void offer_face_set(const PlanarGraph& g, const std::vector<char>& S, const Classifier& cls, const Rational& alpha,
                    std::size_t ell, std::optional<Candidate>& best) {
    offer_rings(g, S, cls, alpha, ell, best);
    std::vector<char> T(S.size(), 0);
    for (std::size_t f = 1; f < S.size(); ++f) T[f] = !S[f];
    offer_rings(g, T, cls, alpha, ell, best);
}

Rational boundary_cost(const PlanarGraph& g, const std::vector<char>& S) {
    Rational c = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (S[g.half[2 * e].face] != S[g.half[2 * e + 1].face]) c += g.cost[e];
    return c;
}

// Face sets from a V-cycle: the interior plus some of the crossed faces.
std::optional<Candidate> reroute(const PlanarGraph& g, const VCycle& c, const Classifier& cls, const Rational& alpha,
                                 std::size_t ell) {
    std::vector<char> S(g.faces.size(), 0);
    std::vector<std::size_t> crossed;
    for (std::size_t f = 1; f < g.faces.size(); ++f) {
        if (c.side[f] == FaceSide::Interior) S[f] = 1;
        if (c.side[f] == FaceSide::Crossed) crossed.push_back(f);
    }
    std::optional<Candidate> best;
    if (crossed.size() <= 10) {
        for (std::size_t mask = 0; mask < (std::size_t(1) << crossed.size()); ++mask) {
            for (std::size_t i = 0; i < crossed.size(); ++i) S[crossed[i]] = (mask >> i) & 1;
            offer_face_set(g, S, cls, alpha, ell, best);
        }
        return best;
    }
    // Greedy by boundary cost, interior first on ties; then single flips.
    for (auto f : crossed) {
        S[f] = 1;
        Rational in = boundary_cost(g, S);
        S[f] = 0;
        if (in <= boundary_cost(g, S)) S[f] = 1;
    }
    offer_face_set(g, S, cls, alpha, ell, best);
    for (auto f : crossed) {
        S[f] ^= 1;
        offer_face_set(g, S, cls, alpha, ell, best);
        S[f] ^= 1;
    }
    for (char all : {1, 0}) {
        for (auto f : crossed) S[f] = all;
        offer_face_set(g, S, cls, alpha, ell, best);
    }
    return best;
}

Cut make_cut(const SimplePolygon& gamma, const CutReport& r) {
    Cut c;
    c.gamma = gamma;
    c.alpha_observed = r.alpha_observed;
    c.ell_observed = r.edges;
    c.inside = r.inside;
    c.crossed = r.crossed;
    c.outside = r.outside;
    return c;
}

}  // namespace

CutReport verify_cut(const SimplePolygon& gamma, const std::vector<WeightedPolygon>& polys, const Rational& alpha,
                     std::size_t ell) {
    return Classifier(polys).run(gamma, alpha, ell);
}

std::size_t cut_edge_budget(const Rational& delta) {
    Rational d3 = 1 / (delta * delta * delta);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), d3.get_num_mpz_t(), d3.get_den_mpz_t());
    return q.fits_ulong_p() ? q.get_ui() : SIZE_MAX;
}

Rational cut_alpha_budget(const Rational& delta) { return 16 * delta; }

Cut build_cheap_cut_triangles(const TriangleSet& ts, const Rational& delta) {
    if (ts.size() == 0) throw Error(ErrorCode::EmptyInstance, "no triangles");
    for (const auto& t : ts.triangles)
        if (3 * t.weight >= ts.total)
            throw Error(ErrorCode::PreconditionHeavyTriangle, "triangle " + t.id + " carries a third of the weight");
    const auto sub = build_subdivision(ts, delta);
    const auto g = build_graph(sub, ts);
    const Rational M = g.total_cost();
    Rational q = M / (delta * ts.total);
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    const std::size_t kbar = std::max<std::size_t>(1, k.get_ui());

    const Rational alpha = cut_alpha_budget(delta);
    const std::size_t ell = cut_edge_budget(delta);
    Classifier cls(ts.triangles);
    std::optional<Candidate> best;
    VCycle used;
    bool used_strong = false;
    for (bool strong : {true, false}) {
        VCycle c;
        try {
            c = find_separator(g, kbar, {strong, 24});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoBalancedCycle) throw;
            continue;
        }
        auto cand = reroute(g, c, cls, alpha, ell);
        if (cand && (!best || better(cand->report, best->report))) {
            best = std::move(cand);
            used = c;
            used_strong = strong;
        }
        if (best && best->report.ok()) break;
    }
    if (!best || !best->report.balanced)
        throw Error(ErrorCode::BalanceUnrepairable, "no balanced cut from the separator");
    Cut cut = make_cut(best->gamma, best->report);
    cut.delta = delta;
    cut.kbar = kbar;
    cut.strong_separator = used_strong;
    cut.face_edges = used.face_edges;
    cut.c_cut = geom::to_double(cut.alpha_observed / delta);
    return cut;
}

TriangleSet triangulated_set(const Instance& inst) {
    Instance tri;
    tri.N = inst.N;
    tri.K = 3;
    tri.epsilon = inst.epsilon;
    for (const auto& p : inst.polygons) {
        auto parts = geom::triangulate(p.shape);
        for (std::size_t i = 0; i < parts.size(); ++i)
            tri.polygons.push_back({p.id + "#" + std::to_string(i), parts[i], p.weight / parts.size()});
    }
    return TriangleSet::from_instance(tri);
}

Cut lift_cut_to_polygons(const Cut& cut, const Instance& inst) {
    std::size_t K = 3;
    for (const auto& p : inst.polygons) K = std::max(K, p.shape.size());
    const Rational alpha = K * cut.alpha_observed;
    const std::size_t ell = K * cut.ell_observed;
    Classifier cls(inst.polygons);
    const Region square = inst.square();

    SimplePolygon gamma = cut.gamma;
    auto touches = [&](const SimplePolygon& g, const SimplePolygon& p) {
        if (!g.bbox().overlaps(p.bbox())) return false;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (geom::segment_touches_polygon(g.edge(k), p)) return true;
        return false;
    };
    auto single = [&](const Region& r) -> std::optional<SimplePolygon> {
        if (r.components().size() != 1 || !r.components()[0].holes.empty()) return std::nullopt;
        return as_polygon(r.components()[0].outer);
    };
    for (const auto& p : inst.polygons) {
        if (!touches(gamma, p.shape)) continue;
        bool through_triangle = false;
        for (const auto& t : geom::triangulate(p.shape)) through_triangle = through_triangle || touches(gamma, t);
        if (through_triangle) continue;
        // Only diagonals are crossed: take the whole polygon in or leave it out.
        const Region G = Region::from_polygon(gamma), P = Region::from_polygon(p.shape);
        std::optional<SimplePolygon> in = single(geom::region_subtract(square, geom::region_subtract(geom::region_subtract(square, G), P)));
        std::optional<SimplePolygon> out = single(geom::region_subtract(G, P));
        std::optional<SimplePolygon> pick;
        for (const auto& option : {in, out}) {
            if (!option) continue;
            if (!pick) pick = option;
            if (cls.run(*option, alpha, ell).balanced) {
                pick = option;
                break;
            }
        }
        if (!pick) throw Error(ErrorCode::BalanceUnrepairable, "cannot route around polygon " + p.id);
        gamma = *pick;
    }
    auto rep = cls.run(gamma, alpha, ell);
    if (!rep.balanced) throw Error(ErrorCode::BalanceUnrepairable, "lifted cut is not balanced");
    Cut out = make_cut(gamma, rep);
    out.delta = cut.delta;
    out.kbar = cut.kbar;
    out.strong_separator = cut.strong_separator;
    out.face_edges = cut.face_edges;
    out.c_cut = sgn(cut.delta) > 0 ? geom::to_double(out.alpha_observed / cut.delta) : 0.0;
    return out;
}

std::string cut_to_json(const Cut& cut, const CutReport& report) {
    using json = nlohmann::ordered_json;
    json j;
    json ring = json::array();
    for (const auto& v : cut.gamma.vertices()) ring.push_back(json::array({v.x.get_str(), v.y.get_str()}));
    j["gamma"] = ring;
    j["alpha_observed"] = cut.alpha_observed.get_str();
    j["ell_observed"] = cut.ell_observed;
    j["side_weights"] = {{"inside", cut.inside.get_str()}, {"crossed", cut.crossed.get_str()}, {"outside", cut.outside.get_str()}};
    j["delta"] = cut.delta.get_str();
    j["kbar"] = cut.kbar;
    j["strong_separator"] = cut.strong_separator;
    j["face_edges"] = cut.face_edges;
    j["c_cut"] = cut.c_cut;
    json v;
    v["edges"] = report.edges;
    v["short_enough"] = report.short_enough;
    v["cheap"] = report.cheap;
    v["balanced"] = report.balanced;
    v["ok"] = report.ok();
    json sides = json::array();
    for (auto s : report.sides) sides.push_back(s == CutSide::Inside ? "inside" : s == CutSide::Crossed ? "crossed" : "outside");
    v["sides"] = sides;
    j["verification"] = v;
    return j.dump(2) + "\n";
}

}  // namespace mwisp
