#include "fixtures.hpp"
#include "mwisp/bench.hpp"
#include "mwisp/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace mwisp;
using fx::P;

namespace {

Instance chain() {
    Instance inst;
    inst.N = 32;
    inst.polygons = {{"a", fx::rect(1, 1, 5, 3), Rational(1)},
                     {"b", fx::rect(4, 1, 9, 3), Rational(3)},
                     {"c", fx::rect(8, 1, 12, 3), Rational(1)}};
    return inst;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("greedy takes the heavier of two overlapping polygons") {
    Instance inst;
    inst.N = 16;
    inst.polygons = {{"a", fx::rect(1, 1, 5, 5), Rational(5)}, {"b", fx::rect(3, 3, 8, 8), Rational(3)}};
    auto s = greedy_baseline(inst);
    CHECK(s.chosen == std::vector<std::string>{"a"});
    CHECK(s.weight == 5);
}

TEST_CASE("greedy on a chain takes the middle") {
    auto s = greedy_baseline(chain());
    CHECK(s.chosen == std::vector<std::string>{"b"});
    CHECK(s.weight == 3);
}

TEST_CASE("greedy takes every polygon of a disjoint set") {
    auto inst = generate_disjoint_triangles(8, 64, 4);
    CHECK(greedy_baseline(inst).chosen.size() == 8);
}

TEST_CASE("greedy is feasible and at least the heaviest polygon") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto inst = generate(GenKind::Triangles, 8, 3, 32, seed);
        auto s = greedy_baseline(inst);
        CHECK(verify_solution(inst, s).feasible);
        Rational maxw = 0;
        for (const auto& p : inst.polygons) maxw = std::max(maxw, p.weight);
        CHECK(s.weight >= maxw);
        // maximality: every skipped polygon touches a chosen one
        for (const auto& p : inst.polygons) {
            if (std::count(s.chosen.begin(), s.chosen.end(), p.id)) continue;
            bool blocked = false;
            for (const auto& id : s.chosen) blocked = blocked || fx::touch_oracle(p.shape, inst.polygons[*inst.find(id)].shape);
            CHECK(blocked);
        }
    }
}

TEST_CASE("an oracle-only suite has ratio one") {
    SuiteConfig c;
    c.count = 1;
    c.n = 5;
    c.methods = {"oracle"};
    auto rows = run_suite(c);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "ok");
    REQUIRE(rows[0].ratio);
    CHECK(*rows[0].ratio == 1);
}

TEST_CASE("suite rows and CSV are deterministic") {
    SuiteConfig c;
    c.count = 4;
    c.n = 5;
    c.solver.k = 12;
    c.threads = 1;
    auto a = rows_to_csv(run_suite(c));
    c.threads = 4;
    auto b = rows_to_csv(run_suite(c));
    CHECK(a == b);
    auto ls = lines(a);
    REQUIRE(ls.size() == 1 + 4 * 3);
    CHECK(ls[0] ==
          "csv_version,instance,seed,n,K,param,method,status,weight,ratio,ratio_decimal,runtime_ms,stripes,lines,"
          "max_crossings,alpha_observed");
    CHECK(ls[1].rfind("1,s1,1,5,3,1/4,oracle,ok,", 0) == 0);
    for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].find(",-,-,-,-,-") != std::string::npos);
}

TEST_CASE("approximate ratios stay within one minus epsilon and one") {
    SuiteConfig c;
    c.count = 6;
    c.n = 5;
    c.methods = {"geo_dp", "greedy"};
    for (const auto& r : run_suite(c)) {
        CHECK(r.status == "ok");
        REQUIRE(r.ratio);
        CHECK(*r.ratio <= 1);
        if (r.method == "geo_dp") CHECK(*r.ratio >= 1 - c.solver.epsilon);
    }
}

TEST_CASE("a failing method is recorded and the suite continues") {
    SuiteConfig c;
    c.count = 2;
    c.n = 6;
    c.N = 24;
    c.delta = Rational(1, 4);
    c.methods = {"structure", "greedy"};
    auto rows = run_suite(c);
    REQUIRE(rows.size() == 4);
    // overlapping random triangles are not a valid triangle set
    bool failed = false;
    for (const auto& r : rows)
        if (r.method == "structure") failed = failed || r.status != "ok";
    CHECK(failed);
    CHECK(rows[1].status == "ok");
    CHECK(rows[3].status == "ok");
}

TEST_CASE("structure rows on disjoint triangles") {
    SuiteConfig c;
    c.kind = SuiteKind::DisjointTriangles;
    c.count = 2;
    c.n = 8;
    c.delta = Rational(1, 5);
    c.methods = {"structure"};
    for (const auto& r : run_suite(c)) {
        CHECK(r.param == "1/5");
        CHECK(r.stripes);
        CHECK(r.max_crossings);
        if (r.status == "ok") {
            CHECK(*r.max_crossings <= 4);
            CHECK(r.alpha_observed);
        }
    }
}

TEST_CASE("suite files") {
    auto c = suite_from_json(R"({"kind": "kgons", "count": 3, "n": 4, "K": 5, "seed": 9, "methods": ["greedy"],
                                 "epsilon": "1/3", "k": 10, "family": "restricted", "ell": 3})");
    CHECK(c.kind == SuiteKind::Kgons);
    CHECK(c.count == 3);
    CHECK(c.K == 5);
    CHECK(c.seed == 9);
    CHECK(c.solver.epsilon == Rational(1, 3));
    CHECK(c.solver.family == CutFamily::RestrictedEll);
    CHECK_THROWS_AS(suite_from_json(R"({"epsilon": "0.25"})"), Error);
    CHECK_THROWS_AS(suite_from_json(R"({"methods": ["magic"]})"), Error);
    CHECK_THROWS_AS(suite_from_json(R"({"methods": ["structure"]})"), Error);
    CHECK_THROWS_AS(suite_from_json("{"), Error);
}
