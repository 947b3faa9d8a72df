#include "fixtures.hpp"
#include "mwisp/oracle.hpp"

#include <doctest.h>

using namespace mwisp;
using fx::P;

namespace {
Instance squares(const std::vector<std::pair<SimplePolygon, long>>& items) {
    Instance inst;
    inst.N = 32;
    inst.K = 4;
    for (std::size_t i = 0; i < items.size(); ++i)
        inst.polygons.push_back({"s" + std::to_string(i), items[i].first, items[i].second});
    return inst;
}
}  // namespace

TEST_CASE("intersection graph examples") {
    CHECK(build_intersection_graph(squares({{fx::rect(0, 0, 2, 2), 1}, {fx::rect(3, 3, 5, 5), 1}})).edge_count() == 0);
    CHECK(build_intersection_graph(squares({{fx::rect(0, 0, 2, 2), 1}, {fx::rect(1, 1, 3, 3), 1}})).edge_count() == 1);
}

TEST_CASE("intersection graph equals the pairwise oracle scan") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = generate(GenKind::Triangles, 10, 3, 32, seed);
        auto g = build_intersection_graph(inst);
        for (std::size_t i = 0; i < inst.n(); ++i) {
            CHECK_FALSE(g.adj[i][i]);
            for (std::size_t j = 0; j < inst.n(); ++j) {
                CHECK(g.adj[i][j] == g.adj[j][i]);
                if (i != j) CHECK(g.adj[i][j] == fx::touch_oracle(inst.polygons[i].shape, inst.polygons[j].shape));
            }
        }
    }
}

TEST_CASE("exact_mwis examples") {
    auto three = squares({{fx::rect(0, 0, 1, 1), 1}, {fx::rect(2, 2, 3, 3), 2}, {fx::rect(4, 4, 5, 5), 3}});
    auto s = oracle_solve(three);
    CHECK(s.weight == 6);
    CHECK(s.chosen.size() == 3);

    auto two = squares({{fx::rect(0, 0, 2, 2), 5}, {fx::rect(1, 1, 3, 3), 3}});
    CHECK(oracle_solve(two).weight == 5);
}

TEST_CASE("exact_mwis equals subset enumeration") {
    Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        IntersectionGraph g;
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 12));
        g.adj.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            g.ids.push_back("v" + std::to_string(i));
            g.weights.push_back(Rational(rng.uniform(1, 9), rng.uniform(1, 3)));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.uniform(0, 2) == 0) g.adj[i][j] = g.adj[j][i] = true;
        auto sol = exact_mwis(g);
        auto best = fx::subset_mwis(g.weights, g.adj);
        CHECK(sol.weight == best.weight);
        // Independence and weight consistency of the returned set.
        Rational w = 0;
        for (std::size_t a = 0; a < sol.chosen.size(); ++a) {
            std::size_t ia = std::stoul(sol.chosen[a].substr(1));
            w += g.weights[ia];
            for (std::size_t b = a + 1; b < sol.chosen.size(); ++b)
                CHECK_FALSE(g.adj[ia][std::stoul(sol.chosen[b].substr(1))]);
        }
        CHECK(w == sol.weight);
    }
}

TEST_CASE("exact_mwis tie-break and cap") {
    IntersectionGraph g;
    g.ids = {"b", "a"};
    g.weights = {1, 1};
    g.adj = {{false, true}, {true, false}};
    CHECK(exact_mwis(g).chosen == std::vector<std::string>{"a"});

    IntersectionGraph big;
    big.ids.assign(25, "x");
    big.weights.assign(25, 1);
    big.adj.assign(25, std::vector<bool>(25, false));
    CHECK_THROWS_AS(exact_mwis(big), Error);
}

TEST_CASE("exact_mwis dominates random feasible sets") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = generate(GenKind::Kgons, 10, 5, 48, seed);
        auto g = build_intersection_graph(inst);
        auto opt = exact_mwis(g);
        CHECK(verify_solution(inst, opt).feasible);
        Rng rng(seed + 100);
        for (int t = 0; t < 20; ++t) {
            std::vector<std::size_t> pick;
            for (std::size_t i = 0; i < inst.n(); ++i) {
                if (rng.uniform(0, 1) == 0) continue;
                bool ok = true;
                for (auto j : pick) ok = ok && !g.adj[i][j];
                if (ok) pick.push_back(i);
            }
            CHECK(make_solution(inst, pick).weight <= opt.weight);
        }
    }
}
