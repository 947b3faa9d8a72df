#pragma once

#include "mwisp/geom.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mwisp {

using geom::BigInt;
using geom::Point;
using geom::Rational;
using geom::Region;
using geom::Ring;
using geom::Segment;
using geom::SimplePolygon;

struct WeightedPolygon {
    std::string id;
    SimplePolygon shape;
    Rational weight;

    friend bool operator==(const WeightedPolygon&, const WeightedPolygon&) = default;
};

/// Weighted polygons inside the square [0, N]^2.
struct Instance {
    std::vector<WeightedPolygon> polygons;
    BigInt N = 0;
    int K = 3;
    Rational epsilon = Rational(1, 4);

    std::size_t n() const { return polygons.size(); }
    Rational total_weight() const;
    /// Index of the polygon with this id, or nullopt.
    std::optional<std::size_t> find(const std::string& id) const;
    Region square() const { return Region::square(Rational(N)); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks the Instance invariants; throws Error(InvalidInput / EmptyInstance /
/// SelfIntersecting) on the first violation.
void validate(const Instance& inst);

/// True iff no two vertices coincide and no three are collinear.
bool in_general_position(const Instance& inst);

struct Solution {
    std::vector<std::string> chosen;  // sorted
    Rational weight = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Builds a solution from polygon indices, sorting ids and summing weights.
Solution make_solution(const Instance& inst, const std::vector<std::size_t>& indices);

struct VerificationReport {
    bool feasible = true;
    Rational weight = 0;
    std::vector<std::pair<std::string, std::string>> violations;
};

/// Throws Error(UnknownId) if the solution names a polygon not in inst.
VerificationReport verify_solution(const Instance& inst, const Solution& sol);

struct Normalized {
    Instance instance;
    Rational scale;
    std::vector<std::string> dropped;
};

/// Scales weights so the maximum is n / epsilon and drops polygons whose scaled
/// weight is below 1.
Normalized normalize_weights(const Instance& inst);

// JSON (rationals as "p/q" strings, coordinates as integer strings).
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);

enum class GenKind { Triangles, Kgons };

/// Seeded random instance: integer coordinates, simple polygons, no two
/// polygons identical, weights in 1..100.
Instance generate(GenKind kind, int n, int K, long N, std::uint64_t seed);

/// Pairwise non-touching triangles in general position (for partition and
/// cut fixtures). Weights in 1..max_weight.
Instance generate_disjoint_triangles(int n, long N, std::uint64_t seed, int max_weight = 100);

/// Small deterministic RNG helper on top of mt19937_64; the standard
/// distributions are not portable across library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace mwisp
