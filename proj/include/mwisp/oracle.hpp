#pragma once

#include "mwisp/instance.hpp"

namespace mwisp {

struct IntersectionGraph {
    std::vector<std::string> ids;
    std::vector<Rational> weights;
    std::vector<std::vector<bool>> adj;

    std::size_t size() const { return ids.size(); }
    std::size_t edge_count() const;
};

IntersectionGraph build_intersection_graph(const Instance& inst);

/// Exact maximum-weight independent set by branch and bound. Among optimal
/// sets the lexicographically smallest sorted id list wins.
/// Throws Error(CapExceeded) above `cap` nodes.
Solution exact_mwis(const IntersectionGraph& g, std::size_t cap = 24);

inline Solution oracle_solve(const Instance& inst, std::size_t cap = 24) {
    return exact_mwis(build_intersection_graph(inst), cap);
}

}  // namespace mwisp
