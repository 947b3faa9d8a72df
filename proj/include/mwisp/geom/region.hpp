#pragma once

#include "mwisp/geom/polygon.hpp"

#include <string>
#include <vector>

namespace mwisp::geom {

/// One connected piece: counter-clockwise outer ring, clockwise hole rings.
struct RegionComponent {
    Ring outer;
    std::vector<Ring> holes;

    friend bool operator==(const RegionComponent&, const RegionComponent&) = default;
};

/// Open planar set given as a disjoint union of components with holes.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<RegionComponent> components);

    static Region from_polygon(const SimplePolygon& p);
    static Region from_ring(const Ring& ccw_ring);
    static Region square(const Rational& n);

    const std::vector<RegionComponent>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    Rational area() const;
    std::size_t edge_count() const;
    Bbox bbox() const;

    /// One Region per connected component.
    std::vector<Region> split() const;

    /// All boundary edges, oriented with the interior on the left.
    std::vector<Segment> boundary_edges() const;
    std::vector<Point> corners() const;

    /// Canonical form: collinear vertices removed, rings start at their
    /// smallest vertex, holes and components sorted.
    Region canonical() const;
    /// String key of the canonical form; equal sets give equal keys.
    std::string key() const;

    friend bool operator==(const Region& a, const Region& b) { return a.comps_ == b.comps_; }

private:
    std::vector<RegionComponent> comps_;
};

Location point_in_region(const Point& p, const Region& r);

/// Assembles a region from directed boundary edges (interior on the left).
/// Opposite pairs cancel; rings are traced with the tightest-turn rule and
/// split at repeated vertices.
Region assemble_region(std::vector<Segment> directed_edges);

Region region_intersect(const Region& r, const Region& g);
Region region_subtract(const Region& r, const Region& g);
/// True iff the open sets intersect.
bool regions_touch(const Region& r, const Region& g);
/// True iff g is contained in the closure of r (g subset of r as open sets).
bool region_contains(const Region& r, const Region& g);

}  // namespace mwisp::geom
