#pragma once

#include "mwisp/partition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mwisp {

/// Plane graph of a subdivision. Edge e owns half-edges 2e (ends[e].first to
/// ends[e].second) and 2e + 1. Every face is bounded by one closed walk of
/// half-edges with the face on the left; face 0 is the outer face.
struct PlanarGraph {
    struct HalfEdge {
        std::size_t origin = 0, target = 0;
        std::size_t face = 0;
        std::size_t pos = 0;  // index in the face walk
    };
    struct Face {
        std::vector<std::size_t> walk;
        Rational weight;
    };

    std::vector<Point> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    std::vector<Rational> cost;
    std::vector<HalfEdge> half;
    std::vector<Face> faces;

    std::size_t edge_count() const { return ends.size(); }
    Segment segment(std::size_t e) const { return {vertices[ends[e].first], vertices[ends[e].second]}; }
    Rational total_weight() const;
    Rational total_cost() const;
};

/// Builds the embedding of `lines` (pairwise touching only at endpoints).
/// face_weights maps the bounded face regions (faces 1, 2, ...) to their
/// weights; the outer face weighs 0. Throws DisconnectedLines if the lines are
/// not connected.
PlanarGraph make_graph(const std::vector<Segment>& lines, const std::vector<Rational>& edge_cost,
                       const std::function<std::vector<Rational>(const std::vector<Region>&)>& face_weights);

/// Edge cost: weight of triangles touching the line. Face weight: each
/// triangle meeting m faces gives w/m to each.
PlanarGraph build_graph(const Subdivision& sub, const TriangleSet& ts);

/// One step of a V-cycle: along an edge, or across a face between two
/// corners (positions in the face walk).
struct VStep {
    bool across = false;
    std::size_t id = 0;  // edge or face
    std::size_t from = 0, to = 0;
    std::size_t corner_in = 0, corner_out = 0;
};

enum class FaceSide { Exterior, Interior, Crossed };

/// Closed curve through vertices of G; faces crossed by a step belong to
/// neither side.
struct VCycle {
    std::vector<VStep> steps;
    std::size_t face_edges = 0;
    Rational ordinary_cost;
    Rational interior, exterior, crossed;
    double c_sep = 0;  // ordinary_cost / (M / kbar)
    std::vector<FaceSide> side;  // per face, filled by evaluate_cycle

    std::vector<Point> points(const PlanarGraph& g) const;
};

struct SeparatorOptions {
    /// Also require max(interior, exterior) + crossed <= 2W/3, so that any
    /// assignment of the crossed faces keeps both sides balanced.
    bool strong = false;
    /// Roots per spanning-tree family.
    std::size_t roots = 24;
};

/// Fills the side weights of a closed step sequence. Throws InternalInvariant
/// if the steps do not form a simple closed curve.
void evaluate_cycle(const PlanarGraph& g, VCycle& c);

bool is_balanced(const PlanarGraph& g, const VCycle& c, bool strong);

/// Balanced V-cycle with at most kbar face edges, chosen among fundamental
/// cycles of several spanning trees by (cost, heavier side, face edges, walk).
/// Throws NoBalancedCycle if no candidate qualifies.
VCycle find_separator(const PlanarGraph& g, std::size_t kbar, const SeparatorOptions& opt = {});

/// Cheapest balanced V-cycle by enumerating all simple cycles.
/// Throws CapExceeded if the graph has more than `cap` edges.
VCycle exhaustive_separator(const PlanarGraph& g, std::size_t kbar, bool strong = false, std::size_t cap = 14);

std::string vcycle_to_json(const PlanarGraph& g, const VCycle& c);

}  // namespace mwisp
