#pragma once

#include "mwisp/instance.hpp"

namespace mwisp {

struct VertexChoice {
    std::string polygon_id;
    std::size_t vertex = 0;
    long ell = 0;
    long ell_prime = 0;
};

struct PerturbationReport {
    /// Factor applied after doubling; output = 2 * scale_factor * input.
    BigInt scale_factor = 1;
    std::vector<VertexChoice> choices;
    /// old id -> new id (ids are kept, so this is the identity).
    std::vector<std::pair<std::string, std::string>> bijection;
};

/// Multiplies every coordinate and N by two.
Instance doubling_precondition(const Instance& inst);

/// Moves every vertex slightly into its polygon so that no three vertices are
/// collinear and no two coincide, keeping the intersection graph. The result
/// has integer coordinates. Throws DegenerateVertex for a straight angle and
/// TooManyCollisions if no candidate position is free.
std::pair<Instance, PerturbationReport> to_general_position(const Instance& inst);

}  // namespace mwisp
