#include "mwisp/geom/point.hpp"

#include <sstream>

namespace mwisp::geom {

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x.get_str() << ", " << p.y.get_str() << ')';
}

std::ostream& operator<<(std::ostream& os, const Segment& s) { return os << '[' << s.a << ' ' << s.b << ']'; }

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

Point midpoint(const Point& a, const Point& b) {
    Rational x = (a.x + b.x) / 2;
    Rational y = (a.y + b.y) / 2;
    return {x, y};
}

Bbox Bbox::of(const Point& a, const Point& b) {
    Bbox box;
    box.xmin = a.x < b.x ? a.x : b.x;
    box.xmax = a.x < b.x ? b.x : a.x;
    box.ymin = a.y < b.y ? a.y : b.y;
    box.ymax = a.y < b.y ? b.y : a.y;
    return box;
}

Bbox Bbox::of(const std::vector<Point>& pts) {
    Bbox box{pts.at(0).x, pts.at(0).y, pts.at(0).x, pts.at(0).y};
    for (const auto& p : pts) {
        if (p.x < box.xmin) box.xmin = p.x;
        if (p.x > box.xmax) box.xmax = p.x;
        if (p.y < box.ymin) box.ymin = p.y;
        if (p.y > box.ymax) box.ymax = p.y;
    }
    return box;
}

void Bbox::extend(const Bbox& o) {
    if (o.xmin < xmin) xmin = o.xmin;
    if (o.ymin < ymin) ymin = o.ymin;
    if (o.xmax > xmax) xmax = o.xmax;
    if (o.ymax > ymax) ymax = o.ymax;
}

}  // namespace mwisp::geom
