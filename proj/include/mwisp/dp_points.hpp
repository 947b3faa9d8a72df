#pragma once

#include "mwisp/instance.hpp"

namespace mwisp {

struct DpPointSet {
    std::vector<Point> basic;                  // sorted, unique
    std::vector<Segment> triangulation_edges;  // E_T, normalized and sorted
    Rational N;

    bool is_basic(const Point& p) const;
    /// Basic, or the single crossing point of two segments with basic
    /// endpoints (checked directly, without materializing the full set).
    bool is_dp_point(const Point& p) const;
};

/// Corners of I plus, for each vertex x-coordinate, the points where the
/// vertical line meets a triangulation edge or a horizontal side of I.
/// Throws NotGeneralPosition.
DpPointSet basic_dp_points(const Instance& inst);

/// Same construction without the general-position check.
DpPointSet basic_dp_points_unchecked(const Instance& inst);

/// One round of pairwise segment intersections over segments with basic
/// endpoints; only proper single-point intersections inside [0,N]^2 that are
/// not already basic. Sorted, unique.
std::vector<Point> additional_dp_points(const std::vector<Point>& basic, const Rational& N);

}  // namespace mwisp
