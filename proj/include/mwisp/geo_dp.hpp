#pragma once

#include "mwisp/dp_points.hpp"
#include "mwisp/instance.hpp"

#include <optional>
#include <string>

namespace mwisp {

enum class CutFamily {
    /// Every chord of I between two basic DP-points on its boundary.
    DpSegmentsExhaustive,
    /// Chords whose smaller side has at most `ell` edges.
    RestrictedEll,
};

struct SolverConfig {
    int k = 64;
    CutFamily family = CutFamily::DpSegmentsExhaustive;
    int ell = 4;
    std::size_t max_cells = 200000;
    Rational epsilon = Rational(1, 4);
};

struct SolveStats {
    std::size_t cells_expanded = 0;
    std::size_t splits_tried = 0;
    double wall_ms = 0;
    long suggested_k = 0;
    bool budget_exceeded = false;
};

struct TraceNode {
    Region region;
    std::vector<std::size_t> contained;  // polygon indices inside region
    std::vector<std::size_t> chosen;     // set only on leaves
    std::vector<std::size_t> children;
    std::string split;  // "leaf", "fallback", "carve:<id>" or "chord:<a>-<b>"
    int depth = 0;
};

struct Trace {
    std::vector<TraceNode> nodes;  // nodes[0] is the root
};

struct SolveResult {
    Solution solution;
    SolveStats stats;
    Trace trace;
};

/// Memoized recursion over DP-cell regions starting from I. Each region is
/// split in two ways: carving out one contained polygon (Q \ P, P) or cutting
/// along a chord of I; every piece must have at most cfg.k edges.
/// Never returns less than the heaviest single polygon. When max_cells is hit
/// the best solution found so far is returned and stats.budget_exceeded is set.
SolveResult solve(const Instance& inst, const SolverConfig& cfg);

struct Split {
    std::string kind;  // "carve" or "chord"
    Region gamma;
    std::vector<Region> pieces;
};

/// All binary splits of q admitted by cfg (before any pruning).
std::vector<Split> enumerate_splits(const Instance& inst, const Region& q, const SolverConfig& cfg);

/// (ceil(log_{3/2}(n^2/eps)) + 1)^2 * (ell + 4)^2.
long suggested_k(std::size_t n, const Rational& eps, int ell);

struct CertificationReport {
    bool ok = true;
    std::vector<std::string> violations;
    /// retained weight at depth j divided by retained weight at depth j-1,
    /// where retained weight sums the optimum over the polygons inside each
    /// region of that depth (leaves carry over).
    std::vector<Rational> level_ratio;
    Rational alpha_hat = 0;
};

/// Checks sibling disjointness, area conservation, leaves with at most one
/// chosen polygon, chosen polygons inside their leaf, and records the
/// per-level retained weight ratios.
CertificationReport certify_trace(const Instance& inst, const Trace& trace);

}  // namespace mwisp
