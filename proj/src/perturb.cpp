#include "mwisp/perturb.hpp"

#include <climits>

namespace mwisp {

Instance doubling_precondition(const Instance& inst) {
    Instance out = inst;
    out.N = inst.N * 2;
    for (auto& p : out.polygons) {
        Ring r = p.shape.vertices();
        for (auto& v : r) {
            v.x *= 2;
            v.y *= 2;
        }
        p.shape = SimplePolygon::make_unchecked(std::move(r));
    }
    return out;
}

namespace {

using i128 = __int128;

int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const BigInt& v) { return sgn(v); }

template <class T>
struct IPoint {
    T x, y;
    bool operator==(const IPoint& o) const { return x == o.x && y == o.y; }
};

template <class T>
int orient(const IPoint<T>& a, const IPoint<T>& b, const IPoint<T>& c) {
    T l = (b.x - a.x) * (c.y - a.y);
    T r = (b.y - a.y) * (c.x - a.x);
    T d = l - r;
    return sign_of(d);
}

template <class T>
T from_big(const BigInt& v);
template <>
i128 from_big<i128>(const BigInt& v) {
    return static_cast<i128>(v.get_si());
}
template <>
BigInt from_big<BigInt>(const BigInt& v) {
    return v;
}

// Only used below the 2^62 bound, so the value fits a long.
BigInt to_big(i128 v) { return BigInt(static_cast<long>(v)); }
BigInt to_big(const BigInt& v) { return v; }

// Positions are kept multiplied by D, so a step of 1/D is one unit.
template <class T>
std::vector<std::vector<BigInt>> search(const Instance& inst, const BigInt& D, long limit,
                                        PerturbationReport& report) {
    std::vector<IPoint<T>> cur;
    const T d = from_big<T>(D);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const auto& v = inst.polygons[i].shape.vertices();
        for (std::size_t j = 0; j < v.size(); ++j) {
            cur.push_back({from_big<T>(v[j].x.get_num()) * d, from_big<T>(v[j].y.get_num()) * d});
        }
    }
    const std::size_t V = cur.size();
    std::size_t base = 0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const auto& ring = inst.polygons[i].shape.vertices();
        const std::size_t m = ring.size();
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t me = base + j;
            const Point& p = ring[j];
            const Point& nx = ring[(j + 1) % m];
            const Point& pv = ring[(j + m - 1) % m];
            int turn = geom::orientation_sign(pv, p, nx);
            if (turn == 0)
                throw Error(ErrorCode::DegenerateVertex,
                            "straight angle at vertex " + std::to_string(j) + " of '" + inst.polygons[i].id + "'");
            T vx = from_big<T>(BigInt(nx.x.get_num() - p.x.get_num()));
            T vy = from_big<T>(BigInt(nx.y.get_num() - p.y.get_num()));
            T wx = from_big<T>(BigInt(pv.x.get_num() - p.x.get_num()));
            T wy = from_big<T>(BigInt(pv.y.get_num() - p.y.get_num()));
            const T sgn_dir = turn > 0 ? T(1) : T(-1);
            const IPoint<T> origin = cur[me];

            bool found = false;
            for (long l = 0; l < limit && !found; ++l) {
                for (long lp = 0; lp < limit && !found; ++lp) {
                    IPoint<T> cand{origin.x + sgn_dir * (T(l) * vx + T(lp) * wx),
                                   origin.y + sgn_dir * (T(l) * vy + T(lp) * wy)};
                    bool ok = true;
                    for (std::size_t a = 0; a < V && ok; ++a) {
                        if (a == me) continue;
                        if (cur[a] == cand) ok = false;
                        for (std::size_t b = a + 1; b < V && ok; ++b) {
                            if (b == me || cur[a] == cur[b]) continue;
                            if (orient(cur[a], cur[b], cand) == 0) ok = false;
                        }
                    }
                    if (!ok) continue;
                    cur[me] = cand;
                    report.choices.push_back({inst.polygons[i].id, j, l, lp});
                    found = true;
                }
            }
            if (!found)
                throw Error(ErrorCode::TooManyCollisions,
                            "no free position for vertex " + std::to_string(j) + " of '" + inst.polygons[i].id + "'");
        }
        base += m;
    }
    std::vector<std::vector<BigInt>> out;
    for (const auto& c : cur) out.push_back({to_big(c.x), to_big(c.y)});
    return out;
}

}  // namespace

std::pair<Instance, PerturbationReport> to_general_position(const Instance& input) {
    validate(input);
    Instance inst = doubling_precondition(input);
    BigInt kn = BigInt(inst.K) * static_cast<unsigned long>(inst.n());
    BigInt grid = kn * kn;  // (Kn)^2 candidate values per coefficient
    // c = 1/(2N), c' = c/5, step = c'/10 * 1/(4N(Kn)^2) = 1/(400 N^2 (Kn)^2).
    BigInt D = 400 * inst.N * inst.N * grid;
    if (!grid.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "instance too large to perturb");
    long limit = grid.get_si();

    PerturbationReport report;
    // Largest magnitude reached: N*D plus 2 * (Kn)^2 * 2N steps.
    BigInt bound = inst.N * D + 4 * grid * inst.N;
    std::vector<std::vector<BigInt>> pos;
    if (bound < (BigInt(1) << 62)) pos = search<i128>(inst, D, limit, report);
    else pos = search<BigInt>(inst, D, limit, report);

    // Smallest common scale that keeps every coordinate integral.
    BigInt g = D;
    for (const auto& c : pos) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[0].get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[1].get_mpz_t());
    }
    report.scale_factor = D / g;

    Instance out = inst;
    out.N = inst.N * report.scale_factor;
    std::size_t k = 0;
    for (auto& p : out.polygons) {
        Ring r;
        for (std::size_t j = 0; j < p.shape.size(); ++j, ++k)
            r.emplace_back(Rational(BigInt(pos[k][0] / g)), Rational(BigInt(pos[k][1] / g)));
        p.shape = SimplePolygon::make(std::move(r));
        report.bijection.emplace_back(p.id, p.id);
    }
    return {std::move(out), std::move(report)};
}

}  // namespace mwisp
