#pragma once

#include "mwisp/separator.hpp"

#include <string>
#include <vector>

namespace mwisp {

enum class CutSide { Inside, Crossed, Outside };

/// Classification of a weighted polygon set against a cut polygon.
struct CutReport {
    std::vector<CutSide> sides;  // per polygon
    Rational inside, crossed, outside, total;
    Rational alpha_observed;  // crossed / total (0 for an empty set)
    std::size_t edges = 0;
    bool short_enough = false;  // edges <= ell
    bool cheap = false;         // crossed <= alpha * total
    bool balanced = false;      // inside and outside <= 2/3 total
    bool ok() const { return short_enough && cheap && balanced; }
};

/// A polygon is crossed when the open polygon meets the boundary of gamma,
/// inside when it lies in gamma, outside otherwise.
CutReport verify_cut(const SimplePolygon& gamma, const std::vector<WeightedPolygon>& polys, const Rational& alpha,
                     std::size_t ell);

struct Cut {
    SimplePolygon gamma;
    Rational alpha_observed;
    std::size_t ell_observed = 0;
    Rational inside, crossed, outside;
    // How it was built (triangle case).
    Rational delta;
    std::size_t kbar = 0;
    bool strong_separator = false;
    std::size_t face_edges = 0;
    double c_cut = 0;  // alpha_observed / delta
};

/// Edge budget ceil(delta^-3) and cheapness budget 16 * delta.
std::size_t cut_edge_budget(const Rational& delta);
Rational cut_alpha_budget(const Rational& delta);

/// Partition, separator and face rerouting for pairwise non-touching
/// triangles. Throws PreconditionHeavyTriangle if a triangle carries at least
/// a third of the weight, BalanceUnrepairable if no balanced cut is found.
Cut build_cheap_cut_triangles(const TriangleSet& ts, const Rational& delta);

/// Triangles of every polygon with the polygon's weight split equally.
TriangleSet triangulated_set(const Instance& inst);

/// Turns a cut for triangulated_set(inst) into a cut for the polygons: a
/// polygon crossed by gamma only along its diagonals is moved to one side
/// entirely. Throws BalanceUnrepairable if the result is not balanced.
Cut lift_cut_to_polygons(const Cut& cut, const Instance& inst);

std::string cut_to_json(const Cut& cut, const CutReport& report);

}  // namespace mwisp
