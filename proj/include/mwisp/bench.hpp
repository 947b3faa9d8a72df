#pragma once

#include "mwisp/geo_dp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwisp {

/// Descending weight (ties by id), skipping polygons that touch a chosen one.
Solution greedy_baseline(const Instance& inst);

/// Triangle and k-gon instances are moved to general position after generation.
enum class SuiteKind { Triangles, Kgons, DisjointTriangles };

struct SuiteConfig {
    SuiteKind kind = SuiteKind::Triangles;
    int count = 10;
    int n = 6;
    int K = 3;
    long N = 64;
    std::uint64_t seed = 1;
    std::vector<std::string> methods{"oracle", "geo_dp", "greedy"};
    SolverConfig solver;
    /// Stripe count, |L| and crossings of the subdivision plus the observed
    /// cut cheapness; only for disjoint triangle suites.
    std::optional<Rational> delta;
    /// Runtime column is "-" unless set, so that reruns are byte-identical.
    bool timing = false;
    std::size_t threads = 0;  // 0: hardware concurrency
};

/// {"kind": "triangles" | "kgons" | "disjoint_triangles", "count", "n", "K",
///  "N", "seed", "methods", "k", "ell", "family", "epsilon", "delta", "timing"}
SuiteConfig suite_from_json(const std::string& text);

struct BenchRow {
    std::string instance;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    int K = 3;
    std::string param;  // epsilon, or delta for structural rows
    std::string method;
    std::string status = "ok";  // or the error code name
    std::optional<Rational> weight, ratio;
    std::optional<double> runtime_ms;
    std::optional<std::size_t> stripes, lines, max_crossings;
    std::optional<Rational> alpha_observed;
};

/// One row per instance and method, in seed order. A failing method is
/// recorded in its row and the suite continues.
std::vector<BenchRow> run_suite(const SuiteConfig& cfg);

inline constexpr int kCsvVersion = 1;
std::string rows_to_csv(const std::vector<BenchRow>& rows);

}  // namespace mwisp
