#pragma once

#include "mwisp/geom/predicates.hpp"

#include <vector>

namespace mwisp::geom {

/// Closed vertex ring; the last vertex connects back to the first.
using Ring = std::vector<Point>;

/// Twice the signed shoelace area (positive for counter-clockwise rings).
Rational signed_area2(const Ring& ring);

/// True iff the ring has >= 3 vertices, no repeated consecutive vertex and no
/// two edges meeting other than adjacent edges at their shared endpoint.
bool is_simple(const Ring& ring);

/// Removes vertices where the boundary continues straight on.
Ring remove_collinear(const Ring& ring);

/// Rotates the ring so that it starts at its lexicographically smallest vertex.
Ring rotate_to_min(const Ring& ring);

enum class Location { Interior, Boundary, Exterior };

/// Exact ray casting. The ring may have either orientation.
Location locate_in_ring(const Point& p, const Ring& ring);

/// Simple counter-clockwise polygon, interpreted as an open set.
class SimplePolygon {
public:
    SimplePolygon() = default;

    /// Validates simplicity and reorients to counter-clockwise.
    /// Throws Error(SelfIntersecting) for non-simple or zero-area input.
    static SimplePolygon make(Ring ring);
    /// Trusts the caller: ring must already be simple and counter-clockwise.
    static SimplePolygon make_unchecked(Ring ring);

    const Ring& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }
    Segment edge(std::size_t i) const { return {v_[i], v_[(i + 1) % v_.size()]}; }
    Rational area() const { return signed_area2(v_) / 2; }
    Bbox bbox() const { return Bbox::of(v_); }

    friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) { return a.v_ == b.v_; }

private:
    explicit SimplePolygon(Ring v) : v_(std::move(v)) {}
    Ring v_;
};

SimplePolygon make_triangle(const Point& a, const Point& b, const Point& c);
SimplePolygon make_rectangle(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

/// Ear clipping, always clipping the ear at the lowest original vertex index.
/// Returns |p| - 2 counter-clockwise triangles. Throws SelfIntersecting.
std::vector<SimplePolygon> triangulate(const SimplePolygon& p);

/// True iff the open interiors intersect.
bool polygons_touch(const SimplePolygon& p, const SimplePolygon& q);

/// True iff the open segment s (endpoints excluded) meets the open polygon.
bool segment_touches_polygon(const Segment& s, const SimplePolygon& p);

}  // namespace mwisp::geom
