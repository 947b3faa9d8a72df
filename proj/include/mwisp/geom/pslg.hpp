#pragma once

#include "mwisp/geom/region.hpp"

#include <map>
#include <vector>

namespace mwisp::geom {

/// Splits segments at every mutual touch point and merges collinear overlaps,
/// so that any two returned segments meet at most in a shared endpoint.
/// Output is normalized (a < b) and sorted.
std::vector<Segment> split_at_touches(const std::vector<Segment>& segments);

/// Planar straight-line graph with a half-edge embedding. Segment s owns
/// half-edges 2s (a -> b) and 2s + 1 (b -> a). Faces lie on the left of their
/// half-edges; face 0 is the unbounded face.
class Pslg {
public:
    struct HalfEdge {
        std::size_t origin = 0;
        std::size_t target = 0;
        std::size_t next = 0;
        std::size_t face = 0;
    };

    /// Segments must pairwise meet only at shared endpoints (see split_at_touches).
    explicit Pslg(const std::vector<Segment>& segments);

    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<Segment>& segments() const { return segs_; }
    const std::vector<HalfEdge>& half_edges() const { return he_; }
    std::size_t twin(std::size_t h) const { return h ^ 1U; }
    std::size_t vertex_id(const Point& p) const;
    bool has_vertex(const Point& p) const { return index_.count(p) > 0; }

    /// Outgoing half-edges of a vertex in counter-clockwise order.
    const std::vector<std::size_t>& outgoing(std::size_t v) const { return out_[v]; }

    std::size_t face_count() const { return faces_.size(); }
    /// Boundary walks of a face (first walk is the outer one for bounded faces).
    const std::vector<std::vector<std::size_t>>& face_walks(std::size_t f) const { return faces_[f]; }
    /// The open face as a region; not available for the unbounded face.
    Region face_region(std::size_t f) const;

    std::size_t component_count() const { return components_; }

private:
    std::vector<Point> verts_;
    std::map<Point, std::size_t> index_;
    std::vector<Segment> segs_;
    std::vector<HalfEdge> he_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::vector<std::size_t>>> faces_;
    std::size_t components_ = 0;
};

}  // namespace mwisp::geom
