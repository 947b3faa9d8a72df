#include "mwisp/cli.hpp"

#include "mwisp/bench.hpp"
#include "mwisp/cheap_cut.hpp"
#include "mwisp/dp_points.hpp"
#include "mwisp/error.hpp"
#include "mwisp/geo_dp.hpp"
#include "mwisp/oracle.hpp"
#include "mwisp/partition.hpp"
#include "mwisp/perturb.hpp"
#include "mwisp/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace mwisp {

namespace {

using json = nlohmann::ordered_json;
using geom::parse_rational;
using geom::to_fraction_string;

json point_json(const Point& p) { return json::array({to_fraction_string(p.x), to_fraction_string(p.y)}); }

struct Common {
    std::string input, output, svg;
    int decimals = 3;
};

class Runner {
public:
    explicit Runner(std::ostream& out) : out_(out) {}

    void emit(const std::string& path, const std::string& text) {
        if (path.empty() || path == "-")
            out_ << text;
        else
            write_text_atomic(path, text);
    }

    static Instance load(const std::string& path) {
        if (path.empty()) throw Error(ErrorCode::InvalidInput, "an input file is required (-i)");
        return instance_from_json(read_text(path));
    }

private:
    std::ostream& out_;
};

Rational delta_flag(const std::string& s) {
    Rational d = parse_rational(s);
    if (d <= 0 || d >= Rational(1, 3)) throw Error(ErrorCode::InvalidInput, "delta must lie in (0, 1/3)");
    return d;
}

Rational epsilon_flag(const std::string& s) {
    Rational e = parse_rational(s);
    if (e <= 0 || e >= 1) throw Error(ErrorCode::InvalidInput, "epsilon must lie in (0, 1)");
    return e;
}

// Triangle instances are used as they are; other polygons are triangulated
// and the cut is lifted back.
std::pair<Cut, CutReport> cheap_cut_for(const Instance& inst, const Rational& delta) {
    bool triangles = true;
    for (const auto& p : inst.polygons) triangles = triangles && p.shape.size() == 3;
    if (triangles) {
        auto ts = TriangleSet::from_instance(inst);
        auto cut = build_cheap_cut_triangles(ts, delta);
        return {cut, verify_cut(cut.gamma, ts.triangles, cut_alpha_budget(delta), cut_edge_budget(delta))};
    }
    auto cut = lift_cut_to_polygons(build_cheap_cut_triangles(triangulated_set(inst), delta), inst);
    std::size_t K = 3;
    for (const auto& p : inst.polygons) K = std::max(K, p.shape.size());
    auto report = verify_cut(cut.gamma, inst.polygons, static_cast<long>(K) * cut_alpha_budget(delta),
                             K * cut_edge_budget(delta));
    return {cut, report};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum weight independent set of polygons"};
    app.require_subcommand(1);
    Runner run(out);
    Common c;
    std::string delta_s, epsilon_s = "1/4";

    auto io = [&](CLI::App* sub, bool needs_input = true) {
        auto* opt = sub->add_option("-i,--input", c.input, "input JSON");
        if (needs_input) opt->required();
        sub->add_option("-o,--output", c.output, "output path (stdout if omitted)");
    };
    auto svg = [&](CLI::App* sub) {
        sub->add_option("--svg", c.svg, "also write an SVG picture");
        sub->add_option("--decimals", c.decimals, "decimal places in SVG output")->check(CLI::Range(0, 12));
    };

    // generate
    auto* gen = app.add_subcommand("generate", "seeded random instance");
    std::string kind = "triangles";
    int n = 6, K = 3;
    long N = 64;
    std::uint64_t seed = 1;
    gen->add_option("--kind", kind)->check(CLI::IsMember({"triangles", "kgons", "disjoint"}));
    gen->add_option("-n", n)->check(CLI::Range(0, 100000));
    gen->add_option("-K", K)->check(CLI::Range(3, 1000));
    gen->add_option("-N", N)->check(CLI::Range(1L, 1L << 40));
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", c.output);
    svg(gen);

    auto* pert = app.add_subcommand("perturb", "move vertices to general position");
    io(pert);
    std::string report_path;
    pert->add_option("--report", report_path, "perturbation report JSON");

    auto* dpp = app.add_subcommand("dp-points", "basic DP-points of an instance");
    io(dpp);
    bool additional = false;
    dpp->add_flag("--additional", additional, "also list the additional DP-points");

    auto* sol = app.add_subcommand("solve", "GEO-DP");
    io(sol);
    svg(sol);
    SolverConfig cfg;
    std::string family = "exhaustive";
    sol->add_option("--k", cfg.k)->check(CLI::Range(3, 1 << 20));
    sol->add_option("--ell", cfg.ell)->check(CLI::Range(1, 1 << 20));
    sol->add_option("--family", family)->check(CLI::IsMember({"exhaustive", "restricted"}));
    sol->add_option("--epsilon", epsilon_s, "p/q");
    sol->add_option("--max-cells", cfg.max_cells);

    auto* part = app.add_subcommand("partition", "plane subdivision of a triangle set");
    io(part);
    svg(part);
    part->add_option("--delta", delta_s, "p/q")->required();

    auto* sep = app.add_subcommand("separator", "balanced V-cycle of the subdivision graph");
    io(sep);
    svg(sep);
    std::size_t kbar = 1;
    sep->add_option("--delta", delta_s, "p/q")->required();
    sep->add_option("--kbar", kbar);
    bool strong = false;
    sep->add_flag("--strong", strong, "both sides balanced whatever side the crossed faces take");

    auto* cc = app.add_subcommand("cheap-cut", "balanced cheap cut");
    io(cc);
    svg(cc);
    cc->add_option("--delta", delta_s, "p/q")->required();

    auto* orc = app.add_subcommand("oracle", "exact optimum by branch and bound");
    io(orc);
    std::size_t cap = 24;
    orc->add_option("--cap", cap);

    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    std::string suite;
    std::size_t threads = 0;
    bench->add_option("--suite", suite)->required();
    bench->add_option("-o,--out,--output", c.output);
    bench->add_option("--threads", threads);

    auto* ren = app.add_subcommand("render", "SVG of an instance, solution, subdivision or cut");
    io(ren);
    std::string artifact = "instance", solution_path;
    ren->add_option("--artifact", artifact)->check(CLI::IsMember({"instance", "solution", "subdivision", "cut"}));
    ren->add_option("--solution", solution_path, "solution JSON (artifact solution)");
    ren->add_option("--delta", delta_s, "p/q (artifacts subdivision and cut)");
    ren->add_option("--decimals", c.decimals)->check(CLI::Range(0, 12));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 1;
    }

    try {
        SvgOptions so;
        so.decimals = c.decimals;
        auto* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "generate") {
            Instance inst = kind == "disjoint" ? generate_disjoint_triangles(n, N, seed)
                                               : generate(kind == "kgons" ? GenKind::Kgons : GenKind::Triangles, n,
                                                          kind == "kgons" ? K : 3, N, seed);
            run.emit(c.output, instance_to_json(inst));
            if (!c.svg.empty()) write_text_atomic(c.svg, svg_instance(inst, so));
        } else if (name == "perturb") {
            auto [inst, rep] = to_general_position(Runner::load(c.input));
            run.emit(c.output, instance_to_json(inst));
            if (!report_path.empty()) {
                json j;
                j["scale_factor"] = rep.scale_factor.get_str();
                j["choices"] = json::array();
                for (const auto& ch : rep.choices)
                    j["choices"].push_back(
                        {{"polygon", ch.polygon_id}, {"vertex", ch.vertex}, {"ell", ch.ell}, {"ell_prime", ch.ell_prime}});
                j["bijection"] = json::array();
                for (const auto& [a, b] : rep.bijection) j["bijection"].push_back({a, b});
                write_text_atomic(report_path, j.dump(2) + "\n");
            }
        } else if (name == "dp-points") {
            auto dp = basic_dp_points(Runner::load(c.input));
            json j;
            j["N"] = to_fraction_string(dp.N);
            j["basic"] = json::array();
            for (const auto& p : dp.basic) j["basic"].push_back(point_json(p));
            j["triangulation_edges"] = json::array();
            for (const auto& s : dp.triangulation_edges)
                j["triangulation_edges"].push_back({point_json(s.a), point_json(s.b)});
            if (additional) {
                j["additional"] = json::array();
                for (const auto& p : additional_dp_points(dp.basic, dp.N)) j["additional"].push_back(point_json(p));
            }
            run.emit(c.output, j.dump(2) + "\n");
        } else if (name == "solve") {
            auto inst = Runner::load(c.input);
            cfg.epsilon = epsilon_flag(epsilon_s);
            cfg.family = family == "restricted" ? CutFamily::RestrictedEll : CutFamily::DpSegmentsExhaustive;
            auto res = solve(inst, cfg);
            run.emit(c.output, solution_to_json(res.solution));
            err << "cells " << res.stats.cells_expanded << ", splits " << res.stats.splits_tried
                << (res.stats.budget_exceeded ? ", cell budget exceeded" : "") << '\n';
            if (!c.svg.empty()) write_text_atomic(c.svg, svg_solution(inst, res.solution, so));
        } else if (name == "partition") {
            auto delta = delta_flag(delta_s);
            auto ts = TriangleSet::from_instance(Runner::load(c.input));
            auto sub = build_subdivision(ts, delta);
            run.emit(c.output, subdivision_to_json(sub, ts));
            if (!c.svg.empty()) write_text_atomic(c.svg, svg_subdivision(sub, ts, so));
        } else if (name == "separator") {
            auto delta = delta_flag(delta_s);
            auto ts = TriangleSet::from_instance(Runner::load(c.input));
            auto g = build_graph(build_subdivision(ts, delta), ts);
            SeparatorOptions sopt;
            sopt.strong = strong;
            auto cyc = find_separator(g, kbar, sopt);
            run.emit(c.output, vcycle_to_json(g, cyc));
            if (!c.svg.empty()) write_text_atomic(c.svg, svg_separator(g, cyc, ts.N, so));
        } else if (name == "cheap-cut") {
            auto delta = delta_flag(delta_s);
            auto inst = Runner::load(c.input);
            auto [cut, report] = cheap_cut_for(inst, delta);
            run.emit(c.output, cut_to_json(cut, report));
            if (!c.svg.empty()) write_text_atomic(c.svg, svg_cut(cut, report, inst.polygons, Rational(inst.N), so));
        } else if (name == "oracle") {
            run.emit(c.output, solution_to_json(oracle_solve(Runner::load(c.input), cap)));
        } else if (name == "bench") {
            auto sc = suite_from_json(read_text(suite));
            if (threads) sc.threads = threads;
            run.emit(c.output, rows_to_csv(run_suite(sc)));
        } else if (name == "render") {
            auto inst = Runner::load(c.input);
            std::string text;
            if (artifact == "instance") {
                text = svg_instance(inst, so);
            } else if (artifact == "solution") {
                if (solution_path.empty()) throw Error(ErrorCode::InvalidInput, "--solution is required");
                auto s = solution_from_json(read_text(solution_path));
                for (const auto& id : s.chosen)
                    if (!inst.find(id)) throw Error(ErrorCode::UnknownId, "solution names unknown polygon " + id);
                text = svg_solution(inst, s, so);
            } else {
                if (delta_s.empty()) throw Error(ErrorCode::InvalidInput, "--delta is required");
                auto delta = delta_flag(delta_s);
                if (artifact == "subdivision") {
                    auto ts = TriangleSet::from_instance(inst);
                    text = svg_subdivision(build_subdivision(ts, delta), ts, so);
                } else {
                    auto [cut, report] = cheap_cut_for(inst, delta);
                    text = svg_cut(cut, report, inst.polygons, Rational(inst.N), so);
                }
            }
            run.emit(c.output, text);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_internal(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace mwisp
