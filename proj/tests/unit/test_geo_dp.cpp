#include "fixtures.hpp"
#include "mwisp/geo_dp.hpp"
#include "mwisp/oracle.hpp"
#include "mwisp/perturb.hpp"

#include <doctest.h>

using namespace mwisp;
using fx::P;

namespace {

Instance random_triangles(std::size_t n, std::uint64_t seed) {
    return to_general_position(generate(GenKind::Triangles, static_cast<int>(n), 3, 32, seed)).first;
}

bool has_split(const std::vector<Split>& splits, const std::string& kind, std::size_t gamma_edges) {
    for (const auto& s : splits)
        if (s.kind == kind && s.gamma.edge_count() == gamma_edges) return true;
    return false;
}

}  // namespace

TEST_CASE("one polygon is its own solution") {
    Instance inst;
    inst.N = 16;
    inst.K = 3;
    inst.polygons = {{"t", fx::tri(2, 2, 10, 2, 6, 8), Rational(7, 2)}};
    auto r = solve(inst, {});
    CHECK(r.solution.chosen == std::vector<std::string>{"t"});
    CHECK(r.solution.weight == Rational(7, 2));
}

TEST_CASE("two far apart triangles are both chosen with k = 8") {
    Instance inst;
    inst.N = 32;
    inst.K = 3;
    inst.polygons = {{"a", fx::tri(1, 2, 9, 3, 4, 10), 3}, {"b", fx::tri(20, 5, 30, 7, 25, 15), 4}};
    SolverConfig cfg;
    cfg.k = 8;
    auto r = solve(inst, cfg);
    CHECK(r.solution.weight == 7);
    CHECK(r.solution.weight == oracle_solve(inst).weight);
    // A vertical chord at a vertex x-coordinate separates them, with basic ends.
    auto dp = basic_dp_points(inst);
    CHECK(dp.is_basic(P(9, 0)));
    CHECK(dp.is_basic(P(9, 32)));
}

TEST_CASE("splits of I include the carve-out and the corner triangles") {
    Instance inst;
    inst.N = 16;
    inst.K = 3;
    inst.polygons = {{"t", fx::tri(2, 2, 10, 2, 6, 8), 1}};
    auto splits = enumerate_splits(inst, inst.square(), {});
    CHECK(has_split(splits, "chord", 3));
    bool carve = false;
    for (const auto& s : splits)
        if (s.kind == "carve") {
            carve = true;
            REQUIRE(s.pieces.size() == 2);
            CHECK(s.pieces[0].area() + s.pieces[1].area() == 256);
            CHECK(s.pieces[0].components()[0].holes.size() == 1);
        }
    CHECK(carve);
    for (const auto& s : splits) {
        Rational area = 0;
        for (const auto& p : s.pieces) {
            area += p.area();
            CHECK(p.edge_count() <= 64);  // (2 (ell + 4))^2 with ell = 4
        }
        CHECK(area == 256);
    }
    SolverConfig three;
    three.family = CutFamily::RestrictedEll;
    three.ell = 3;
    for (const auto& s : enumerate_splits(inst, inst.square(), three))
        if (s.kind == "chord") CHECK(s.gamma.edge_count() == 3);
}

TEST_CASE("solutions are feasible, bounded and monotone") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Instance inst = random_triangles(6, seed);
        Rational opt = oracle_solve(inst).weight;
        Rational maxw = 0;
        for (const auto& p : inst.polygons) maxw = std::max(maxw, p.weight);

        SolverConfig small;
        small.k = 6;
        small.family = CutFamily::RestrictedEll;
        small.ell = 3;
        SolverConfig mid = small;
        mid.family = CutFamily::DpSegmentsExhaustive;
        SolverConfig big;
        big.k = 64;
        Rational prev = 0;
        for (const auto& cfg : {small, mid, big}) {
            auto r = solve(inst, cfg);
            CHECK(verify_solution(inst, r.solution).feasible);
            CHECK(r.solution.weight >= maxw);
            CHECK(r.solution.weight <= opt);
            CHECK(r.solution.weight >= prev);
            prev = r.solution.weight;
        }
        CHECK(prev == opt);
    }
}

TEST_CASE("solve is deterministic") {
    Instance inst = random_triangles(6, 42);
    auto a = solve(inst, {});
    auto b = solve(inst, {});
    CHECK(a.solution == b.solution);
    CHECK(a.trace.nodes.size() == b.trace.nodes.size());
}

TEST_CASE("budget exhaustion keeps a feasible answer") {
    Instance inst = random_triangles(7, 3);
    SolverConfig cfg;
    cfg.max_cells = 1;
    auto r = solve(inst, cfg);
    CHECK(r.stats.budget_exceeded);
    CHECK(verify_solution(inst, r.solution).feasible);
    Rational maxw = 0;
    for (const auto& p : inst.polygons) maxw = std::max(maxw, p.weight);
    CHECK(r.solution.weight >= maxw);
}

TEST_CASE("certify_trace") {
    Instance one;
    one.N = 16;
    one.K = 3;
    one.polygons = {{"t", fx::tri(2, 2, 10, 2, 6, 8), 1}};
    auto r1 = solve(one, {});
    CHECK(r1.trace.nodes.size() == 1);
    CHECK(certify_trace(one, r1.trace).ok);

    Instance two = one;
    two.polygons.push_back({"u", fx::tri(11, 12, 15, 9, 14, 15), 1});
    auto r2 = solve(two, {});
    auto rep2 = certify_trace(two, r2.trace);
    CHECK(rep2.ok);
    for (const auto& nd : r2.trace.nodes)
        if (nd.children.empty()) CHECK(nd.chosen.size() <= 1);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Instance inst = random_triangles(6, seed + 10);
        auto r = solve(inst, {});
        auto rep = certify_trace(inst, r.trace);
        CHECK(rep.ok);
        for (const auto& ratio : rep.level_ratio) CHECK(1 - ratio <= rep.alpha_hat);
        // The leaves of the trace carry exactly the returned solution.
        std::vector<std::string> leaves;
        for (const auto& nd : r.trace.nodes)
            for (auto c : nd.chosen) leaves.push_back(inst.polygons[c].id);
        std::sort(leaves.begin(), leaves.end());
        CHECK(leaves == r.solution.chosen);
    }
}

TEST_CASE("suggested k") {
    // n = 2, eps = 1/2: log_{1.5}(8) = 5.13 -> 6 levels + 1 = 7; (ell + 4)^2 = 64.
    CHECK(suggested_k(2, Rational(1, 2), 4) == 49 * 64);
}
