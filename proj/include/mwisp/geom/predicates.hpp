#pragma once

#include "mwisp/geom/point.hpp"

#include <variant>

namespace mwisp::geom {

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of the determinant of (b - a, c - a).
Orientation orientation(const Point& a, const Point& b, const Point& c);
int orientation_sign(const Point& a, const Point& b, const Point& c);

/// (b - a) x (c - a), exact.
Rational cross(const Point& a, const Point& b, const Point& c);

/// True iff p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);
/// True iff p lies on s but is not one of its endpoints.
bool in_segment_interior(const Point& p, const Segment& s);

using SegmentIntersection = std::variant<std::monostate, Point, Segment>;

/// Exact intersection of two closed segments. A Segment result (endpoints in
/// lexicographic order) is returned only for collinear overlaps of positive
/// length. The result does not depend on argument order.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Compares the directions of vectors u and v by polar angle in [0, 2pi).
/// Both vectors must be non-zero.
bool angle_less(const Point& u, const Point& v);

}  // namespace mwisp::geom
