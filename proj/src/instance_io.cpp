#include "mwisp/instance.hpp"

#include <json.hpp>

namespace mwisp {

using json = nlohmann::ordered_json;

namespace {

json big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

BigInt big_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
    if (j.is_string()) return geom::parse_integer(j.get<std::string>());
    throw Error(ErrorCode::InvalidInput, std::string("field '") + what + "' must be an integer");
}

Rational rational_from_json(const json& j, const char* what) {
    if (j.is_string()) return geom::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error(ErrorCode::InvalidInput, std::string("field '") + what + "' must be a \"p/q\" string");
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(ErrorCode::InvalidInput, std::string("missing field '") + name + "'");
    return j.at(name);
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    json j;
    j["n"] = inst.n();
    j["K"] = inst.K;
    j["N"] = big_to_json(inst.N);
    j["epsilon"] = geom::to_fraction_string(inst.epsilon);
    json polys = json::array();
    for (const auto& p : inst.polygons) {
        json jp;
        jp["id"] = p.id;
        jp["weight"] = geom::to_fraction_string(p.weight);
        json verts = json::array();
        for (const auto& v : p.shape.vertices()) verts.push_back(json::array({v.x.get_str(), v.y.get_str()}));
        jp["vertices"] = std::move(verts);
        polys.push_back(std::move(jp));
    }
    j["polygons"] = std::move(polys);
    return j.dump() + "\n";
}

Instance instance_from_json(const std::string& text) {
    json j = parse(text);
    Instance inst;
    inst.N = big_from_json(field(j, "N"), "N");
    const json& k = field(j, "K");
    if (!k.is_number_integer()) throw Error(ErrorCode::InvalidInput, "field 'K' must be an integer");
    inst.K = k.get<int>();
    inst.epsilon = j.contains("epsilon") ? rational_from_json(j.at("epsilon"), "epsilon") : Rational(1, 4);
    const json& polys = field(j, "polygons");
    if (!polys.is_array()) throw Error(ErrorCode::InvalidInput, "'polygons' must be an array");
    for (const auto& jp : polys) {
        WeightedPolygon p;
        const json& id = field(jp, "id");
        p.id = id.is_string() ? id.get<std::string>() : id.dump();
        p.weight = rational_from_json(field(jp, "weight"), "weight");
        Ring ring;
        for (const auto& jv : field(jp, "vertices")) {
            if (!jv.is_array() || jv.size() != 2) throw Error(ErrorCode::InvalidInput, "vertex must be [x, y]");
            ring.emplace_back(Rational(big_from_json(jv[0], "x")), Rational(big_from_json(jv[1], "y")));
        }
        p.shape = SimplePolygon::make(std::move(ring));
        inst.polygons.push_back(std::move(p));
    }
    if (j.contains("n") && j.at("n").is_number_integer() && j.at("n").get<std::size_t>() != inst.n())
        throw Error(ErrorCode::InvalidInput, "field 'n' does not match the polygon count");
    validate(inst);
    return inst;
}

std::string solution_to_json(const Solution& sol) {
    json j;
    j["chosen"] = sol.chosen;
    j["weight"] = geom::to_fraction_string(sol.weight);
    return j.dump() + "\n";
}

Solution solution_from_json(const std::string& text) {
    json j = parse(text);
    Solution s;
    for (const auto& id : field(j, "chosen")) s.chosen.push_back(id.get<std::string>());
    std::sort(s.chosen.begin(), s.chosen.end());
    s.weight = rational_from_json(field(j, "weight"), "weight");
    return s;
}

}  // namespace mwisp
