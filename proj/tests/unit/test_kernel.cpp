#include "fixtures.hpp"

#include <doctest.h>

using namespace mwisp;
using namespace mwisp::geom;
using fx::P;

TEST_CASE("orientation examples") {
    CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
    CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
    CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
}

TEST_CASE("segment_intersection examples") {
    auto r1 = segment_intersection({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
    REQUIRE(std::holds_alternative<Point>(r1));
    CHECK(std::get<Point>(r1) == P(1, 1));

    auto r2 = segment_intersection({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)});
    CHECK(std::holds_alternative<std::monostate>(r2));

    auto r3 = segment_intersection({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
    REQUIRE(std::holds_alternative<Segment>(r3));
    CHECK(std::get<Segment>(r3) == Segment{P(1, 0), P(2, 0)});
}

TEST_CASE("segment_intersection proper crossing at a rational point") {
    auto r = segment_intersection({P(0, 0), P(3, 1)}, {P(0, 1), P(1, 0)});
    REQUIRE(std::holds_alternative<Point>(r));
    CHECK(std::get<Point>(r) == Point(Rational(3, 4), Rational(1, 4)));
}

TEST_CASE("segment_intersection is symmetric") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        Segment s{P(rng.uniform(0, 4), rng.uniform(0, 4)), P(rng.uniform(0, 4), rng.uniform(0, 4))};
        Segment t{P(rng.uniform(0, 4), rng.uniform(0, 4)), P(rng.uniform(0, 4), rng.uniform(0, 4))};
        if (s.a == s.b || t.a == t.b) continue;
        CHECK(segment_intersection(s, t) == segment_intersection(t, s));
        // Also independent of endpoint order.
        CHECK(segment_intersection(s, t) == segment_intersection({s.b, s.a}, t));
    }
}

TEST_CASE("polygons_touch examples") {
    auto unit = fx::rect(0, 0, 1, 1);
    CHECK_FALSE(polygons_touch(unit, fx::rect(2, 0, 3, 1)));
    CHECK_FALSE(polygons_touch(unit, fx::rect(1, 0, 2, 1)));
    auto shifted = SimplePolygon::make({Point(Rational(1, 2), Rational(1, 2)), Point(Rational(3, 2), Rational(1, 2)),
                                        Point(Rational(3, 2), Rational(3, 2)), Point(Rational(1, 2), Rational(3, 2))});
    CHECK(polygons_touch(unit, shifted));
}

TEST_CASE("polygons_touch corner cases") {
    // Identical polygons, no vertex strictly inside the other.
    CHECK(polygons_touch(fx::tri(0, 0, 4, 0, 0, 4), fx::tri(0, 0, 4, 0, 0, 4)));
    // Same diagonal split: two halves of a square only share the diagonal.
    CHECK_FALSE(polygons_touch(fx::tri(0, 0, 4, 0, 4, 4), fx::tri(0, 0, 4, 4, 0, 4)));
    // Overlap along a shared edge, same side.
    CHECK(polygons_touch(fx::tri(0, 0, 4, 0, 2, 2), fx::tri(0, 0, 4, 0, 2, 1)));
    // Vertex touching only.
    CHECK_FALSE(polygons_touch(fx::rect(0, 0, 2, 2), fx::rect(2, 2, 4, 4)));
    // Cross shape: no vertex of one inside the other, edges cross.
    CHECK(polygons_touch(fx::rect(0, 1, 3, 2), fx::rect(1, 0, 2, 3)));
}

TEST_CASE("polygons_touch agrees with the separating-axis oracle") {
    Rng rng(5);
    for (int i = 0; i < 600; ++i) {
        auto p = fx::random_small_polygon(rng, 6);
        auto q = fx::random_small_polygon(rng, 6);
        bool t = polygons_touch(p, q);
        CHECK(t == fx::touch_oracle(p, q));
        CHECK(t == polygons_touch(q, p));
        CHECK(polygons_touch(p, p));
    }
}

TEST_CASE("point_in_region examples") {
    Region sq = Region::from_polygon(fx::rect(0, 0, 1, 1));
    CHECK(point_in_region(Point(Rational(1, 2), Rational(1, 2)), sq) == Location::Interior);
    CHECK(point_in_region(Point(Rational(1), Rational(1, 2)), sq) == Location::Boundary);
    CHECK(point_in_region(P(2, 2), sq) == Location::Exterior);
}

TEST_CASE("region_intersect examples") {
    Region sq = Region::from_polygon(fx::rect(0, 0, 2, 2));
    CHECK(region_intersect(sq, sq) == sq.canonical());

    Region a = Region::from_polygon(SimplePolygon::make(
        {P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
    Region b = Region::from_polygon(SimplePolygon::make(
        {Point(Rational(1, 2), Rational(0)), Point(Rational(3, 2), Rational(0)), Point(Rational(3, 2), Rational(1)),
         Point(Rational(1, 2), Rational(1))}));
    Region c = region_intersect(a, b);
    REQUIRE(c.components().size() == 1);
    CHECK(c.edge_count() == 4);
    CHECK(c.area() == Rational(1, 2));
}

TEST_CASE("region_subtract examples") {
    Region big = Region::from_polygon(fx::rect(0, 0, 4, 4));
    Region hole = region_subtract(big, Region::from_polygon(fx::rect(1, 1, 3, 3)));
    REQUIRE(hole.components().size() == 1);
    CHECK(hole.components()[0].holes.size() == 1);
    CHECK(hole.edge_count() == 8);
    CHECK(hole.area() == 12);

    CHECK(region_subtract(big, Region::from_polygon(fx::rect(5, 5, 6, 6))) == big.canonical());

    Region half = Region::from_polygon(fx::rect(2, 0, 6, 4));
    Region rest = region_subtract(big, half);
    CHECK(rest.area() + region_intersect(big, half).area() == big.area());
    CHECK(rest == Region::from_polygon(fx::rect(0, 0, 2, 4)).canonical());
}

TEST_CASE("subtracting a piece touching the boundary at one point") {
    Region big = Region::from_polygon(fx::rect(0, 0, 4, 4));
    // Diamond whose left corner touches the outer edge.
    Region diamond = Region::from_polygon(SimplePolygon::make({P(0, 2), P(2, 1), P(3, 2), P(2, 3)}));
    Region r = region_subtract(big, diamond);
    CHECK(r.area() == 16 - diamond.area());
    CHECK(point_in_region(P(2, 2), r) == Location::Exterior);
    CHECK(point_in_region(P(1, 1), r) == Location::Interior);
}

namespace {
// Membership oracle: a point off all boundaries is inside r∩g iff inside both.
void check_pointwise(const Region& r, const Region& g, const Region& inter, const Region& diff) {
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            Point p(Rational(4 * i + 1, 13), Rational(4 * j + 3, 17));
            Location lr = point_in_region(p, r), lg = point_in_region(p, g);
            if (lr == Location::Boundary || lg == Location::Boundary) continue;
            bool in_r = lr == Location::Interior, in_g = lg == Location::Interior;
            CHECK((point_in_region(p, inter) == Location::Interior) == (in_r && in_g));
            CHECK((point_in_region(p, diff) == Location::Interior) == (in_r && !in_g));
        }
}
}  // namespace

TEST_CASE("area conservation and pointwise agreement on random pairs") {
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        Region r = Region::from_polygon(fx::random_small_polygon(rng, 6));
        Region g = Region::from_polygon(fx::random_small_polygon(rng, 6));
        if (i % 3 == 0) r = region_subtract(r, Region::from_polygon(fx::random_small_polygon(rng, 6)));
        if (r.empty()) continue;
        Region inter = region_intersect(r, g);
        Region diff = region_subtract(r, g);
        CHECK(inter.area() + diff.area() == r.area());
        check_pointwise(r, g, inter, diff);
    }
}

TEST_CASE("intersection complexity bound for two 4-edge polygons") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        auto p = fx::random_small_polygon(rng, 8);
        auto q = fx::random_small_polygon(rng, 8);
        if (p.size() > 4 || q.size() > 4) continue;
        Region c = region_intersect(Region::from_polygon(p), Region::from_polygon(q));
        CHECK(c.components().size() <= 64);
        for (const auto& comp : c.split()) CHECK(comp.edge_count() <= 64);
    }
}

TEST_CASE("region_contains") {
    Region big = Region::from_polygon(fx::rect(0, 0, 4, 4));
    CHECK(region_contains(big, Region::from_polygon(fx::rect(1, 1, 2, 2))));
    CHECK(region_contains(big, Region::from_polygon(fx::rect(0, 0, 2, 2))));
    CHECK(region_contains(big, big));
    CHECK_FALSE(region_contains(big, Region::from_polygon(fx::rect(3, 3, 5, 5))));
    Region ring = region_subtract(big, Region::from_polygon(fx::rect(1, 1, 3, 3)));
    CHECK_FALSE(region_contains(ring, Region::from_polygon(fx::rect(1, 1, 2, 2))));
    CHECK(region_contains(ring, Region::from_polygon(fx::rect(0, 0, 1, 4))));
}

TEST_CASE("canonical keys ignore rotation and collinear vertices") {
    Region a = Region::from_ring({P(0, 0), P(2, 0), P(4, 0), P(4, 4), P(0, 4)});
    Region b = Region::from_ring({P(4, 4), P(0, 4), P(0, 0), P(4, 0)});
    CHECK(a.key() == b.key());
    CHECK(a.key() != Region::from_polygon(fx::rect(0, 0, 4, 5)).key());
}

TEST_CASE("triangulate examples") {
    auto t = fx::tri(0, 0, 4, 0, 0, 4);
    auto one = triangulate(t);
    REQUIRE(one.size() == 1);
    CHECK(one[0].area() == t.area());

    auto quad = SimplePolygon::make({P(0, 0), P(5, 1), P(4, 4), P(1, 3)});
    auto two = triangulate(quad);
    REQUIRE(two.size() == 2);
    CHECK(two[0].area() + two[1].area() == quad.area());
}

TEST_CASE("triangulate random polygons") {
    Rng rng(8);
    int done = 0;
    while (done < 60) {
        auto inst = generate(GenKind::Kgons, 1, 8, 64, static_cast<std::uint64_t>(rng.uniform(0, 1 << 30)));
        const auto& p = inst.polygons[0].shape;
        auto tris = triangulate(p);
        CHECK(tris.size() == p.size() - 2);
        Rational sum = 0;
        for (const auto& t : tris) {
            sum += fx::shoelace2(t.vertices());
            CHECK(orientation(t[0], t[1], t[2]) == Orientation::CCW);
        }
        CHECK(sum == fx::shoelace2(p.vertices()));
        for (std::size_t i = 0; i < tris.size(); ++i)
            for (std::size_t j = i + 1; j < tris.size(); ++j)
                CHECK_FALSE(fx::convex_interiors_meet(tris[i].vertices(), tris[j].vertices()));
        CHECK(triangulate(p) == tris);
        ++done;
    }
}

TEST_CASE("triangulate rejects self-intersecting input") {
    auto bow = SimplePolygon::make_unchecked({P(0, 0), P(2, 2), P(2, 0), P(0, 2)});
    CHECK_THROWS_AS(triangulate(bow), Error);
    CHECK_THROWS_AS(SimplePolygon::make({P(0, 0), P(2, 2), P(2, 0), P(0, 2)}), Error);
}

TEST_CASE("pslg faces of a 2x2 grid") {
    std::vector<Segment> segs;
    for (long i = 0; i <= 2; ++i) {
        segs.push_back({P(0, i), P(2, i)});
        segs.push_back({P(i, 0), P(i, 2)});
    }
    auto split = split_at_touches(segs);
    CHECK(split.size() == 12);
    Pslg g(split);
    CHECK(g.vertices().size() == 9);
    CHECK(g.face_count() == 5);  // 4 cells + unbounded
    Rational area = 0;
    for (std::size_t f = 1; f < g.face_count(); ++f) {
        Region r = g.face_region(f);
        CHECK(r.area() == 1);
        area += r.area();
    }
    CHECK(area == 4);
    CHECK(g.component_count() == 1);
}

TEST_CASE("pslg face with a dangling edge and an island") {
    std::vector<Segment> segs{{P(0, 0), P(4, 0)}, {P(4, 0), P(4, 4)}, {P(4, 4), P(0, 4)}, {P(0, 4), P(0, 0)},
                              {P(0, 0), P(1, 1)},  // antenna into the square
                              {P(2, 2), P(3, 2)}, {P(3, 2), P(3, 3)}, {P(3, 3), P(2, 2)}};
    Pslg g(split_at_touches(segs));
    CHECK(g.component_count() == 2);
    CHECK(g.face_count() == 3);
    Rational total = 0;
    for (std::size_t f = 1; f < g.face_count(); ++f) total += g.face_region(f).area();
    CHECK(total == 16);
}
