#include "mwisp/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace mwisp {

std::size_t IntersectionGraph::edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) m += adj[i][j];
    return m;
}

IntersectionGraph build_intersection_graph(const Instance& inst) {
    IntersectionGraph g;
    const std::size_t n = inst.n();
    g.adj.assign(n, std::vector<bool>(n, false));
    for (const auto& p : inst.polygons) {
        g.ids.push_back(p.id);
        g.weights.push_back(p.weight);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (geom::polygons_touch(inst.polygons[i].shape, inst.polygons[j].shape)) g.adj[i][j] = g.adj[j][i] = true;
    return g;
}

namespace {

struct Search {
    explicit Search(const IntersectionGraph& graph) : g(graph) {}

    const IntersectionGraph& g;
    std::vector<std::size_t> order;       // nodes by descending weight
    std::vector<std::uint64_t> conflicts;  // adjacency masks in `order` positions
    std::vector<Rational> w;
    Rational best_w = -1;
    std::vector<std::string> best_ids;
    std::uint64_t chosen = 0;

    std::vector<std::string> ids_of(std::uint64_t mask) const {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (mask >> k & 1U) out.push_back(g.ids[order[k]]);
        std::sort(out.begin(), out.end());
        return out;
    }

    void offer(const Rational& cur) {
        int c = cmp(cur, best_w);
        if (c < 0) return;
        auto ids = ids_of(chosen);
        if (c > 0 || ids < best_ids) {
            best_w = cur;
            best_ids = std::move(ids);
        }
    }

    void run(std::size_t k, std::uint64_t blocked, const Rational& cur) {
        if (k == order.size()) {
            offer(cur);
            return;
        }
        Rational bound = cur;
        for (std::size_t t = k; t < order.size(); ++t)
            if (!(blocked >> t & 1U)) bound += w[t];
        // Ties are explored so that the id tie-break is exact.
        if (bound < best_w) return;
        if (!(blocked >> k & 1U)) {
            chosen |= std::uint64_t{1} << k;
            run(k + 1, blocked | conflicts[k], cur + w[k]);
            chosen &= ~(std::uint64_t{1} << k);
        }
        run(k + 1, blocked, cur);
    }
};

}  // namespace

Solution exact_mwis(const IntersectionGraph& g, std::size_t cap) {
    const std::size_t n = g.size();
    if (n > cap || n > 64)
        throw Error(ErrorCode::CapExceeded, "oracle limited to " + std::to_string(std::min<std::size_t>(cap, 64)) +
                                                " polygons, got " + std::to_string(n));
    Search s(g);
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
        if (g.weights[a] != g.weights[b]) return g.weights[a] > g.weights[b];
        return g.ids[a] < g.ids[b];
    });
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[s.order[k]] = k;
    s.conflicts.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        s.w.push_back(g.weights[s.order[k]]);
        for (std::size_t j = 0; j < n; ++j)
            if (g.adj[s.order[k]][j]) s.conflicts[k] |= std::uint64_t{1} << pos[j];
    }
    s.run(0, 0, Rational(0));
    Solution sol;
    sol.chosen = s.best_ids;
    sol.weight = s.best_w < 0 ? Rational(0) : s.best_w;
    return sol;
}

}  // namespace mwisp
