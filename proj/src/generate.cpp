#include "mwisp/instance.hpp"

#include <algorithm>
#include <set>

namespace mwisp {

using geom::orientation_sign;

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

long Rng::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the draw unbiased and portable.
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
}

namespace {

constexpr int kMaxAttempts = 10000;

Point random_point(Rng& rng, long lo_x, long hi_x, long lo_y, long hi_y) {
    return Point(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y));
}

std::vector<Point> sorted_vertices(const Ring& r) {
    std::vector<Point> v = r;
    std::sort(v.begin(), v.end());
    return v;
}

std::optional<Ring> random_triangle(Rng& rng, long N) {
    Point a = random_point(rng, 0, N, 0, N);
    Point b = random_point(rng, 0, N, 0, N);
    Point c = random_point(rng, 0, N, 0, N);
    if (orientation_sign(a, b, c) == 0) return std::nullopt;
    return Ring{a, b, c};
}

// Star-shaped polygon: random points sorted by angle around a random centre.
std::optional<Ring> random_kgon(Rng& rng, int K, long N) {
    long r = std::max<long>(2, rng.uniform(std::max<long>(2, N / 16), std::max<long>(2, N / 4)));
    Point c = random_point(rng, 0, N, 0, N);
    long cx = c.x.get_num().get_si(), cy = c.y.get_num().get_si();
    std::vector<Point> pts;
    for (int i = 0; i < K; ++i) {
        Point p = random_point(rng, std::max(0L, cx - r), std::min(N, cx + r), std::max(0L, cy - r),
                               std::min(N, cy + r));
        if (p == c) return std::nullopt;
        pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        return geom::angle_less(Point(a.x - c.x, a.y - c.y), Point(b.x - c.x, b.y - c.y));
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        if (a == b || orientation_sign(c, a, b) == 0) return std::nullopt;
    }
    Ring ring(pts.begin(), pts.end());
    if (geom::remove_collinear(ring).size() != ring.size() || !geom::is_simple(ring)) return std::nullopt;
    return ring;
}

}  // namespace

Instance generate(GenKind kind, int n, int K, long N, std::uint64_t seed) {
    if (n < 1 || K < 3 || N < 4) throw Error(ErrorCode::InvalidInput, "generate needs n >= 1, K >= 3, N >= 4");
    Rng rng(seed);
    Instance inst;
    inst.N = N;
    inst.K = kind == GenKind::Triangles ? 3 : K;
    std::set<std::vector<Point>> seen;
    for (int i = 0; i < n; ++i) {
        std::optional<Ring> ring;
        for (int attempt = 0; attempt < kMaxAttempts && !ring; ++attempt) {
            ring = kind == GenKind::Triangles ? random_triangle(rng, N) : random_kgon(rng, K, N);
            if (ring && seen.count(sorted_vertices(*ring))) ring.reset();
        }
        if (!ring) throw Error(ErrorCode::GenerationFailed, "could not place polygon " + std::to_string(i));
        seen.insert(sorted_vertices(*ring));
        WeightedPolygon p;
        p.id = "p" + std::to_string(i);
        p.shape = SimplePolygon::make(std::move(*ring));
        p.weight = rng.uniform(1, 100);
        inst.polygons.push_back(std::move(p));
    }
    return inst;
}

Instance generate_disjoint_triangles(int n, long N, std::uint64_t seed, int max_weight) {
    if (n < 0 || N < 4) throw Error(ErrorCode::InvalidInput, "generate_disjoint_triangles needs N >= 4");
    Rng rng(seed);
    Instance inst;
    inst.N = N;
    inst.K = 3;
    std::vector<Point> pts;
    long span = std::max<long>(2, N / 4);
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            Point a = random_point(rng, 0, N, 0, N);
            long ax = a.x.get_num().get_si(), ay = a.y.get_num().get_si();
            Point b = random_point(rng, std::max(0L, ax - span), std::min(N, ax + span), std::max(0L, ay - span),
                                   std::min(N, ay + span));
            Point c = random_point(rng, std::max(0L, ax - span), std::min(N, ax + span), std::max(0L, ay - span),
                                   std::min(N, ay + span));
            if (orientation_sign(a, b, c) == 0) continue;
            SimplePolygon t = geom::make_triangle(a, b, c);
            bool ok = true;
            for (const auto& p : inst.polygons)
                if (geom::polygons_touch(p.shape, t)) ok = false;
            // General position against all earlier vertices.
            std::vector<Point> all = pts;
            for (const Point* q : {&a, &b, &c}) {
                if (!ok) break;
                for (std::size_t x = 0; x < all.size() && ok; ++x) {
                    if (all[x] == *q) ok = false;
                    for (std::size_t y = x + 1; y < all.size() && ok; ++y)
                        if (orientation_sign(all[x], all[y], *q) == 0) ok = false;
                }
                all.push_back(*q);
            }
            if (!ok) continue;
            pts = std::move(all);
            WeightedPolygon p;
            p.id = "t" + std::to_string(i);
            p.shape = std::move(t);
            p.weight = rng.uniform(1, max_weight);
            inst.polygons.push_back(std::move(p));
            placed = true;
        }
        if (!placed) throw Error(ErrorCode::GenerationFailed, "could not place triangle " + std::to_string(i));
    }
    return inst;
}

}  // namespace mwisp
