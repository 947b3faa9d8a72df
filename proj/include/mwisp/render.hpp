#pragma once

#include "mwisp/cheap_cut.hpp"
#include "mwisp/partition.hpp"
#include "mwisp/separator.hpp"

#include <string>

namespace mwisp {

/// Coordinates are exact until emission, where they are rounded half away
/// from zero to `decimals` places. The y axis points up.
struct SvgOptions {
    int decimals = 3;
    int pixels = 800;
};

/// Fixed-point decimal with trailing zeros removed.
std::string format_decimal(const Rational& r, int decimals);

std::string svg_instance(const Instance& inst, const SvgOptions& opt = {});
/// Chosen polygons filled, the others outlined.
std::string svg_solution(const Instance& inst, const Solution& sol, const SvgOptions& opt = {});
/// Stripes shaded, faces tinted, L0 black and Lext gray.
std::string svg_subdivision(const Subdivision& sub, const TriangleSet& ts, const SvgOptions& opt = {});
/// gamma in red over the polygons, colored by side.
std::string svg_cut(const Cut& cut, const CutReport& report, const std::vector<WeightedPolygon>& polys,
                    const Rational& N, const SvgOptions& opt = {});
/// The graph's edges with the V-cycle's point walk on top.
std::string svg_separator(const PlanarGraph& g, const VCycle& c, const Rational& N, const SvgOptions& opt = {});

/// Throws IoError.
std::string read_text(const std::string& path);
/// Writes to a temporary file next to `path` and renames it. Throws IoError.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace mwisp
