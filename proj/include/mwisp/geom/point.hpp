#pragma once

#include "mwisp/geom/rational.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace mwisp::geom {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    /// Lexicographic (x, then y).
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        return c < 0 || (c == 0 && a.y < b.y);
    }
    friend bool operator>(const Point& a, const Point& b) { return b < a; }
    friend bool operator<=(const Point& a, const Point& b) { return !(b < a); }
    friend bool operator>=(const Point& a, const Point& b) { return !(a < b); }
};

std::ostream& operator<<(std::ostream& os, const Point& p);
std::string to_string(const Point& p);

Point midpoint(const Point& a, const Point& b);

struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
    friend bool operator<(const Segment& s, const Segment& t) {
        if (s.a != t.a) return s.a < t.a;
        return s.b < t.b;
    }
    /// Same point set, endpoints ordered lexicographically.
    Segment normalized() const { return b < a ? Segment{b, a} : *this; }
};

std::ostream& operator<<(std::ostream& os, const Segment& s);

/// Axis-aligned bounding box with exact bounds.
struct Bbox {
    Rational xmin, ymin, xmax, ymax;

    static Bbox of(const Point& a, const Point& b);
    static Bbox of(const std::vector<Point>& pts);
    bool overlaps(const Bbox& o) const {
        return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
    }
    bool contains(const Point& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
    void extend(const Bbox& o);
};

}  // namespace mwisp::geom
