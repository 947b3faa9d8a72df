#pragma once

// Shared test helpers and independent oracles. The oracles avoid the library
// code paths they are used to check.

#include "mwisp/instance.hpp"
#include "mwisp/separator.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fx {

using mwisp::Instance;
using mwisp::Point;
using mwisp::Rational;
using mwisp::Region;
using mwisp::Ring;
using mwisp::Segment;
using mwisp::SimplePolygon;

Point P(long x, long y);
SimplePolygon rect(long x0, long y0, long x1, long y1);
SimplePolygon tri(long ax, long ay, long bx, long by, long cx, long cy);

/// Twice the shoelace area, written independently of the kernel.
Rational shoelace2(const Ring& r);

/// Interiors of two convex rings meet iff no edge direction separates them.
bool convex_interiors_meet(const Ring& a, const Ring& b);

/// Touch test through fan-free triangle pairs (uses the separating-axis oracle).
bool touch_oracle(const SimplePolygon& p, const SimplePolygon& q);

bool has_collinear_triple(const std::vector<Point>& pts);

struct SubsetBest {
    Rational weight = 0;
    std::vector<std::size_t> members;
};

/// 2^n enumeration of independent sets of a graph given as an adjacency matrix.
SubsetBest subset_mwis(const std::vector<Rational>& w, const std::vector<std::vector<bool>>& adj);

/// Random simple region pair material: a small polygon with integer corners in
/// [0, grid]^2 (triangle, rectangle or star-shaped polygon).
SimplePolygon random_small_polygon(mwisp::Rng& rng, long grid);

/// Weight of triangles whose interior meets an open quad/region, by brute force.
Rational touched_weight(const Region& r, const Instance& ts);

/// Open segment against open triangle: split s at the triangle edges and test
/// the midpoints of the pieces with ray casting.
bool segment_meets_open_triangle(const Segment& s, const Ring& tri);

/// Small connected plane graph on the 3x3 grid: the boundary of [0,2]^2,
/// random inner unit edges and random diagonals, with random edge costs and
/// face weights (each face at most a third of the total). Empty when the draw
/// has more than 14 edges or unusable weights.
struct SmallGraph {
    std::vector<Segment> lines;
    std::vector<Rational> cost;
    std::vector<long> face_draws;  // weights handed out to faces in order
};
std::optional<SmallGraph> small_plane_graph(std::uint64_t seed);

/// n pairwise non-touching polygons with K vertices each, one per cell of a
/// grid over [0, N]^2, star-shaped around the cell centre. Weights 1..100.
Instance disjoint_kgons(int n, int K, long N, std::uint64_t seed);

/// L-shaped hexagon (0,0) (6,0) (6,2) (2,2) (2,6) (0,6) shifted by (x, y).
SimplePolygon l_hexagon(long x, long y);

/// A long thin triangle across most of I, flanked above and below by rows of
/// small triangles so that stripes are narrow. Before the owned triangles are
/// cut out the long one is crossed by many vertical lines.
Instance tall_triangle_instance();

/// Three unit-weight triangles used to trace the connecting walks by hand.
Instance walk_instance();

mwisp::PlanarGraph graph_of(const SmallGraph& sg);

/// Side weights of a V-cycle read off its drawing: the step points form a
/// polygon, chords across the outer face are routed around a large box, and
/// each face is located by a point just left of its first walk edge. When the
/// outer face is crossed the inside and outside labels may be swapped.
struct DrawnSides {
    Rational in, out, crossed;
    bool outer_crossed = false;
};
DrawnSides sides_by_drawing(const mwisp::PlanarGraph& g, const mwisp::VCycle& c);

}  // namespace fx
