#include "mwisp/bench.hpp"

#include "mwisp/cheap_cut.hpp"
#include "mwisp/error.hpp"
#include "mwisp/oracle.hpp"
#include "mwisp/partition.hpp"
#include "mwisp/perturb.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace mwisp {

Solution greedy_baseline(const Instance& inst) {
    std::vector<std::size_t> order(inst.n());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto &p = inst.polygons[a], &q = inst.polygons[b];
        if (p.weight != q.weight) return p.weight > q.weight;
        return p.id < q.id;
    });
    std::vector<std::size_t> chosen;
    for (auto i : order) {
        bool free = true;
        for (auto j : chosen)
            if (geom::polygons_touch(inst.polygons[i].shape, inst.polygons[j].shape)) {
                free = false;
                break;
            }
        if (free) chosen.push_back(i);
    }
    return make_solution(inst, chosen);
}

SuiteConfig suite_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("suite: ") + e.what());
    }
    SuiteConfig c;
    try {
        std::string kind = j.value("kind", "triangles");
        if (kind == "triangles")
            c.kind = SuiteKind::Triangles;
        else if (kind == "kgons")
            c.kind = SuiteKind::Kgons;
        else if (kind == "disjoint_triangles")
            c.kind = SuiteKind::DisjointTriangles;
        else
            throw Error(ErrorCode::InvalidInput, "suite: unknown kind '" + kind + "'");
        c.count = j.value("count", c.count);
        c.n = j.value("n", c.n);
        c.K = j.value("K", c.K);
        c.N = j.value("N", c.N);
        c.seed = j.value("seed", c.seed);
        if (j.contains("methods")) c.methods = j["methods"].get<std::vector<std::string>>();
        c.solver.k = j.value("k", c.solver.k);
        c.solver.ell = j.value("ell", c.solver.ell);
        std::string fam = j.value("family", "exhaustive");
        if (fam == "exhaustive")
            c.solver.family = CutFamily::DpSegmentsExhaustive;
        else if (fam == "restricted")
            c.solver.family = CutFamily::RestrictedEll;
        else
            throw Error(ErrorCode::InvalidInput, "suite: unknown family '" + fam + "'");
        if (j.contains("epsilon")) c.solver.epsilon = geom::parse_rational(j["epsilon"].get<std::string>());
        if (j.contains("delta")) c.delta = geom::parse_rational(j["delta"].get<std::string>());
        c.timing = j.value("timing", false);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("suite: ") + e.what());
    }
    if (c.count < 0 || c.n < 0 || c.K < 3) throw Error(ErrorCode::InvalidInput, "suite: bad sizes");
    for (const auto& m : c.methods)
        if (m != "oracle" && m != "geo_dp" && m != "greedy" && m != "structure")
            throw Error(ErrorCode::InvalidInput, "suite: unknown method '" + m + "'");
    if (std::count(c.methods.begin(), c.methods.end(), "structure") && !c.delta)
        throw Error(ErrorCode::InvalidInput, "suite: the structure method needs delta");
    return c;
}

namespace {

Instance make_instance(const SuiteConfig& c, std::uint64_t seed) {
    switch (c.kind) {
        case SuiteKind::Triangles: return to_general_position(generate(GenKind::Triangles, c.n, 3, c.N, seed)).first;
        case SuiteKind::Kgons: return to_general_position(generate(GenKind::Kgons, c.n, c.K, c.N, seed)).first;
        case SuiteKind::DisjointTriangles: return generate_disjoint_triangles(c.n, c.N, seed);
    }
    return {};
}

std::string code_of(const std::exception& e) {
    if (auto* err = dynamic_cast<const Error*>(&e)) return std::string(error_code_name(err->code()));
    return "Exception";
}

std::vector<BenchRow> run_instance(const SuiteConfig& c, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    BenchRow base;
    base.instance = "s" + std::to_string(seed);
    base.seed = seed;
    base.K = c.kind == SuiteKind::Kgons ? c.K : 3;
    base.param = c.solver.epsilon.get_str();
    Instance inst;
    try {
        inst = make_instance(c, seed);
    } catch (const std::exception& e) {
        BenchRow r = base;
        r.method = "generate";
        r.status = code_of(e);
        return {r};
    }
    base.n = inst.n();

    std::optional<Rational> opt;
    try {
        opt = oracle_solve(inst).weight;
    } catch (const Error&) {
    }
    auto timed = [&](const std::string& method, auto&& body) {
        BenchRow r = base;
        r.method = method;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = code_of(e);
        }
        if (c.timing)
            r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (r.weight && opt && sgn(*opt) > 0) r.ratio = Rational(*r.weight / *opt);
        rows.push_back(std::move(r));
    };
    for (const auto& m : c.methods) {
        if (m == "oracle") {
            timed(m, [&](BenchRow& r) { r.weight = oracle_solve(inst).weight; });
        } else if (m == "geo_dp") {
            timed(m, [&](BenchRow& r) {
                auto res = solve(inst, c.solver);
                if (!verify_solution(inst, res.solution).feasible)
                    throw Error(ErrorCode::InternalInvariant, "infeasible solution");
                r.weight = res.solution.weight;
                if (res.stats.budget_exceeded) r.status = "budget_exceeded";
            });
        } else if (m == "greedy") {
            timed(m, [&](BenchRow& r) { r.weight = greedy_baseline(inst).weight; });
        } else if (m == "structure") {
            timed(m, [&](BenchRow& r) {
                r.param = c.delta->get_str();
                auto ts = TriangleSet::from_instance(inst);
                auto sub = build_subdivision(ts, *c.delta);
                auto audit = audit_subdivision(sub, ts);
                r.stripes = audit.stripe_count;
                r.lines = audit.l_count;
                r.max_crossings = audit.max_crossings;
                if (!audit.ok) r.status = "audit_failed";
                r.alpha_observed = build_cheap_cut_triangles(ts, *c.delta).alpha_observed;
            });
        }
    }
    return rows;
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->get_str() : "-"; }

std::string opt_dec(const std::optional<Rational>& r) {
    if (!r) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", geom::to_double(*r));
    return buf;
}

std::string opt_num(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::vector<BenchRow> run_suite(const SuiteConfig& cfg) {
    const std::size_t count = static_cast<std::size_t>(std::max(cfg.count, 0));
    std::vector<std::vector<BenchRow>> per(count);
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) per[i] = run_instance(cfg, cfg.seed + i);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::vector<BenchRow> rows;
    for (auto& v : per)
        for (auto& r : v) rows.push_back(std::move(r));
    return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "csv_version,instance,seed,n,K,param,method,status,weight,ratio,ratio_decimal,runtime_ms,stripes,lines,"
           "max_crossings,alpha_observed\n";
    for (const auto& r : rows) {
        std::string rt = "-";
        if (r.runtime_ms) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", *r.runtime_ms);
            rt = buf;
        }
        out << kCsvVersion << ',' << r.instance << ',' << r.seed << ',' << r.n << ',' << r.K << ',' << r.param << ','
            << r.method << ',' << r.status << ',' << opt_str(r.weight) << ',' << opt_str(r.ratio) << ','
            << opt_dec(r.ratio) << ',' << rt << ',' << opt_num(r.stripes) << ',' << opt_num(r.lines) << ','
            << opt_num(r.max_crossings) << ',' << opt_str(r.alpha_observed) << '\n';
    }
    return out.str();
}

}  // namespace mwisp
