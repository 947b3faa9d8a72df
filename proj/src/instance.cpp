#include "mwisp/instance.hpp"

#include <algorithm>
#include <set>

namespace mwisp {

using geom::orientation_sign;

Rational Instance::total_weight() const {
    Rational w = 0;
    for (const auto& p : polygons) w += p.weight;
    return w;
}

std::optional<std::size_t> Instance::find(const std::string& id) const {
    for (std::size_t i = 0; i < polygons.size(); ++i)
        if (polygons[i].id == id) return i;
    return std::nullopt;
}

void validate(const Instance& inst) {
    if (inst.polygons.empty()) throw Error(ErrorCode::EmptyInstance, "instance has no polygons");
    if (inst.N < 1) throw Error(ErrorCode::InvalidInput, "N must be positive");
    if (inst.K < 3) throw Error(ErrorCode::InvalidInput, "K must be at least 3");
    if (sgn(inst.epsilon) <= 0) throw Error(ErrorCode::InvalidInput, "epsilon must be positive");
    Rational n(inst.N);
    std::set<std::string> ids;
    for (const auto& p : inst.polygons) {
        if (!ids.insert(p.id).second) throw Error(ErrorCode::InvalidInput, "duplicate polygon id '" + p.id + "'");
        if (sgn(p.weight) <= 0) throw Error(ErrorCode::InvalidInput, "non-positive weight on '" + p.id + "'");
        const auto& v = p.shape.vertices();
        if (v.size() < 3 || v.size() > static_cast<std::size_t>(inst.K))
            throw Error(ErrorCode::InvalidInput, "polygon '" + p.id + "' has " + std::to_string(v.size()) +
                                                     " vertices, K = " + std::to_string(inst.K));
        for (const auto& q : v) {
            if (!geom::is_integer(q.x) || !geom::is_integer(q.y))
                throw Error(ErrorCode::InvalidInput, "non-integer vertex in '" + p.id + "'");
            if (sgn(q.x) < 0 || sgn(q.y) < 0 || q.x > n || q.y > n)
                throw Error(ErrorCode::InvalidInput, "vertex outside [0,N]^2 in '" + p.id + "'");
        }
        if (!geom::is_simple(v)) throw Error(ErrorCode::SelfIntersecting, "polygon '" + p.id + "' is not simple");
    }
}

bool in_general_position(const Instance& inst) {
    std::vector<Point> pts;
    for (const auto& p : inst.polygons) pts.insert(pts.end(), p.shape.vertices().begin(), p.shape.vertices().end());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) return false;
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (orientation_sign(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

Solution make_solution(const Instance& inst, const std::vector<std::size_t>& indices) {
    Solution s;
    for (auto i : indices) {
        s.chosen.push_back(inst.polygons.at(i).id);
        s.weight += inst.polygons[i].weight;
    }
    std::sort(s.chosen.begin(), s.chosen.end());
    return s;
}

VerificationReport verify_solution(const Instance& inst, const Solution& sol) {
    VerificationReport rep;
    std::vector<std::size_t> idx;
    for (const auto& id : sol.chosen) {
        auto i = inst.find(id);
        if (!i) throw Error(ErrorCode::UnknownId, "unknown polygon id '" + id + "'");
        idx.push_back(*i);
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
        rep.weight += inst.polygons[idx[a]].weight;
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const auto& p = inst.polygons[idx[a]];
            const auto& q = inst.polygons[idx[b]];
            if (idx[a] == idx[b] || geom::polygons_touch(p.shape, q.shape)) {
                rep.feasible = false;
                rep.violations.emplace_back(p.id, q.id);
            }
        }
    }
    return rep;
}

Normalized normalize_weights(const Instance& inst) {
    if (inst.polygons.empty()) throw Error(ErrorCode::EmptyInstance, "instance has no polygons");
    Rational maxw = 0;
    for (const auto& p : inst.polygons) {
        if (sgn(p.weight) <= 0) throw Error(ErrorCode::InvalidInput, "non-positive weight on '" + p.id + "'");
        if (p.weight > maxw) maxw = p.weight;
    }
    Normalized out;
    out.scale = Rational(static_cast<long>(inst.n())) / inst.epsilon / maxw;
    out.instance = inst;
    out.instance.polygons.clear();
    for (const auto& p : inst.polygons) {
        WeightedPolygon q = p;
        q.weight = p.weight * out.scale;
        if (q.weight < 1)
            out.dropped.push_back(p.id);
        else
            out.instance.polygons.push_back(std::move(q));
    }
    if (out.instance.polygons.empty()) throw Error(ErrorCode::EmptyInstance, "all polygons dropped");
    return out;
}

}  // namespace mwisp
