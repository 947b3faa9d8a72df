#pragma once

#include "mwisp/instance.hpp"

#include <string>
#include <vector>

namespace mwisp {

/// Pairwise non-touching weighted triangles. Each corner carries a third of
/// its triangle's weight.
struct TriangleSet {
    std::vector<WeightedPolygon> triangles;
    Rational N;
    Rational total;

    /// Throws InvalidInput if a polygon is not a triangle or two triangles touch.
    static TriangleSet from_instance(const Instance& inst);
    Instance to_instance() const;
    std::size_t size() const { return triangles.size(); }
    const SimplePolygon& shape(std::size_t i) const { return triangles[i].shape; }
};

/// Open stripe (x0, x1) x [0, N].
struct Stripe {
    std::size_t index = 0;
    Rational x0, x1;
    Rational weight;  // corner weight strictly inside
};

/// A triangle edge, identified by owner and edge index.
struct EdgeRef {
    std::size_t tri = 0;
    std::size_t edge = 0;
    Segment seg;  // normalized (left endpoint first)

    friend bool operator==(const EdgeRef& a, const EdgeRef& b) { return a.tri == b.tri && a.edge == b.edge; }
};

/// Open quadrilateral of a stripe between two lines crossing it.
struct Cell {
    std::size_t stripe = 0;
    Rational x0, x1;
    Rational y1L, y2L, y1R, y2R;  // bottom line at x0/x1, top line at x0/x1
    bool dense = false;
    Rational touched_weight;

    SimplePolygon polygon() const;
};

struct StripeCells {
    std::vector<EdgeRef> crossing;  // E_i, top to bottom
    std::vector<EdgeRef> selected;  // selected lines, top to bottom
    std::vector<Cell> cells;        // top to bottom
};

struct Subdivision {
    Rational N;
    Rational delta;
    std::vector<Stripe> stripes;
    std::vector<StripeCells> cells;
    std::vector<Segment> L0;
    std::vector<Segment> Lext;
    std::vector<Segment> L;
    std::vector<Region> faces;
    std::vector<std::size_t> owned;  // triangle indices, ascending
};

/// Left to right. Throws InvalidInput unless 0 < delta < 1/3.
std::vector<Stripe> build_stripes(const TriangleSet& ts, const Rational& delta);

/// Edges spanning the closed x-range of the stripe, ordered top to bottom.
std::vector<EdgeRef> crossing_edges(const TriangleSet& ts, const Stripe& s);

/// Total weight of triangles whose interior meets the open polygon.
Rational touched_weight(const TriangleSet& ts, const SimplePolygon& area);

/// Greedy top-down selection of the lines bounding the cells of a stripe.
StripeCells build_cells(const Stripe& stripe, const TriangleSet& ts, const Rational& delta);

/// Boundary of I, walls of dense cells and the connecting walks from both
/// ends of every line in L0. Collinear overlaps are merged.
/// Throws WalkDiverged if a walk revisits a line.
std::vector<Segment> build_lext(const std::vector<Stripe>& stripes, const std::vector<StripeCells>& cells,
                                const std::vector<Segment>& L0, const TriangleSet& ts);

/// Triangles that contain one of the dense cells.
std::vector<std::size_t> owned_triangles(const std::vector<StripeCells>& cells, const TriangleSet& ts);

/// Parts of s outside the open convex polygon.
std::vector<Segment> clip_outside(const Segment& s, const SimplePolygon& convex);

/// Removes owned interiors, adds owned boundaries, splits at touch points
/// and computes the faces.
Subdivision cut_out_owned(Subdivision sub, const TriangleSet& ts);

/// Runs the whole construction.
Subdivision build_subdivision(const TriangleSet& ts, const Rational& delta);

struct PartitionAudit {
    bool ok = true;
    std::vector<std::string> violations;
    std::size_t stripe_count = 0;
    std::size_t cell_count = 0;
    std::size_t max_selected = 0;
    std::size_t l0_count = 0, lext_count = 0, l_count = 0;
    std::size_t max_crossings_before = 0;  // lines of L0 and Lext touching one triangle
    std::size_t max_crossings = 0;         // lines of L touching one triangle
    Rational max_face_weight;              // over faces that are not owned triangles
    Rational area_sum;
    /// Observed constants: |L0| * delta^6, |L0 u Lext| * delta^8.
    double c_l0 = 0, c_lext = 0;
};

PartitionAudit audit_subdivision(const Subdivision& sub, const TriangleSet& ts);

/// eps / (K * ceil(log2(n / eps))).
Rational delta_for(const Rational& eps, int K, std::size_t n);

std::string subdivision_to_json(const Subdivision& sub, const TriangleSet& ts);

}  // namespace mwisp
