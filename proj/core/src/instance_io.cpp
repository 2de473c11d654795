#include "relfix/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "relfix/error.hpp"

namespace relfix {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& error) {
        throw InstanceError(std::string("invalid JSON: ") + error.what());
    }
}

const json& require_field(const json& object, const char* name) {
    auto it = object.find(name);
    if (it == object.end()) {
        throw InstanceError(std::string("missing field '") + name + "'");
    }
    return *it;
}

std::string require_string(const json& value, const std::string& where) {
    if (!value.is_string()) {
        throw InstanceError(where + ": expected a string");
    }
    return value.get<std::string>();
}

void reject_unknown_keys(const json& object,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw InstanceError("unknown field '" + key + "'");
        }
    }
}

constexpr std::initializer_list<const char*> kInstanceKeys = {
    "points", "sigma", "relation", "map", "Y", "x0", "k", "rho"};

Carrier parse_points(const json& document) {
    const json& points = require_field(document, "points");
    if (!points.is_array()) {
        throw InstanceError("'points': expected an array of labels");
    }
    std::vector<std::string> labels;
    for (size_t i = 0; i < points.size(); ++i) {
        labels.push_back(require_string(points[i], "points[" + std::to_string(i) + "]"));
    }
    return Carrier::create(std::move(labels));
}

FiniteDistanceSpace parse_sigma(const json& document, Carrier carrier, bool strict) {
    const json& sigma = require_field(document, "sigma");
    if (!sigma.is_array()) {
        throw InstanceError("'sigma': expected an array of [x, y, value] triples");
    }
    std::vector<std::tuple<std::string, std::string, Rational>> entries;
    for (size_t i = 0; i < sigma.size(); ++i) {
        const json& triple = sigma[i];
        const std::string where = "sigma[" + std::to_string(i) + "]";
        if (!triple.is_array() || triple.size() != 3) {
            throw InstanceError(where + ": expected [x, y, value]");
        }
        entries.emplace_back(require_string(triple[0], where),
                             require_string(triple[1], where),
                             parse_rational(require_string(triple[2], where)));
    }
    try {
        return FiniteDistanceSpace::from_entries(std::move(carrier), entries, strict);
    } catch (const InstanceError& error) {
        throw InstanceError(std::string("'sigma': ") + error.what());
    }
}

FiniteRelation parse_relation(const json& document, const Carrier& carrier) {
    const json& relation = require_field(document, "relation");
    if (!relation.is_array()) {
        throw InstanceError("'relation': expected an array of [x, y] pairs");
    }
    std::vector<PointPair> pairs;
    for (size_t i = 0; i < relation.size(); ++i) {
        const json& pair = relation[i];
        const std::string where = "relation[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            throw InstanceError(where + ": expected [x, y]");
        }
        pairs.emplace_back(require_string(pair[0], where), require_string(pair[1], where));
    }
    try {
        return FiniteRelation::create(carrier, pairs);
    } catch (const InstanceError& error) {
        throw InstanceError(std::string("'relation': ") + error.what());
    }
}

SelfMap parse_map(const json& document, const Carrier& carrier) {
    const json& map = require_field(document, "map");
    if (!map.is_object()) {
        throw InstanceError("'map': expected an object label -> label");
    }
    std::vector<PointPair> assignments;
    for (const auto& [from, to] : map.items()) {
        assignments.emplace_back(from, require_string(to, "map['" + from + "']"));
    }
    try {
        return SelfMap::create(carrier, assignments);
    } catch (const InstanceError& error) {
        throw InstanceError(std::string("'map': ") + error.what());
    }
}

IntegrandSpec parse_rho(const json& value) {
    if (!value.is_object()) {
        throw InstanceError("'rho': expected an object {kind, params}");
    }
    reject_unknown_keys(value, {"kind", "params"});
    const std::string kind = require_string(require_field(value, "kind"), "rho.kind");
    const json& params = require_field(value, "params");
    if (!params.is_object()) {
        throw InstanceError("'rho.params': expected an object");
    }
    if (kind == "constant") {
        reject_unknown_keys(params, {"c"});
        return IntegrandSpec::constant(
            parse_rational(require_string(require_field(params, "c"), "rho.params.c")));
    }
    if (kind == "power") {
        reject_unknown_keys(params, {"c", "alpha"});
        const Rational alpha =
            parse_rational(require_string(require_field(params, "alpha"), "rho.params.alpha"));
        if (alpha.get_den() != 1 || alpha < 0) {
            throw InstanceError("'rho.params.alpha': expected a nonnegative integer");
        }
        return IntegrandSpec::power(
            parse_rational(require_string(require_field(params, "c"), "rho.params.c")),
            alpha.get_num().get_ui());
    }
    if (kind == "piecewise_linear") {
        reject_unknown_keys(params, {"points"});
        const json& points = require_field(params, "points");
        if (!points.is_array()) {
            throw InstanceError("'rho.params.points': expected an array of [t, v] pairs");
        }
        std::vector<std::pair<Rational, Rational>> table;
        for (size_t i = 0; i < points.size(); ++i) {
            const json& pair = points[i];
            const std::string where = "rho.params.points[" + std::to_string(i) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                throw InstanceError(where + ": expected [t, v]");
            }
            table.emplace_back(parse_rational(require_string(pair[0], where)),
                               parse_rational(require_string(pair[1], where)));
        }
        return IntegrandSpec::piecewise_linear(std::move(table));
    }
    throw InstanceError("'rho.kind': unknown kind '" + kind +
                        "' (expected constant, power or piecewise_linear)");
}

ordered_json rho_to_json(const IntegrandSpec& rho) {
    ordered_json params = ordered_json::object();
    switch (rho.kind()) {
        case IntegrandSpec::Kind::Constant:
            params["c"] = to_string(rho.scale());
            return ordered_json{{"kind", "constant"}, {"params", params}};
        case IntegrandSpec::Kind::Power:
            params["c"] = to_string(rho.scale());
            params["alpha"] = std::to_string(rho.exponent());
            return ordered_json{{"kind", "power"}, {"params", params}};
        case IntegrandSpec::Kind::PiecewiseLinear: {
            ordered_json points = ordered_json::array();
            for (const auto& [t, v] : rho.points()) {
                points.push_back({to_string(t), to_string(v)});
            }
            params["points"] = std::move(points);
            return ordered_json{{"kind", "piecewise_linear"}, {"params", params}};
        }
    }
    throw std::logic_error("unreachable integrand kind");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw InstanceError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

} // namespace

Instance parse_instance(std::string_view jsonText, bool strict) {
    const json document = parse_json(jsonText);
    if (!document.is_object()) {
        throw InstanceError("instance document must be a JSON object");
    }
    reject_unknown_keys(document, kInstanceKeys);

    Carrier carrier = parse_points(document);
    FiniteDistanceSpace space = parse_sigma(document, carrier, strict);
    FiniteRelation relation = parse_relation(document, carrier);
    SelfMap map = parse_map(document, carrier);

    std::optional<std::vector<std::string>> y;
    if (auto it = document.find("Y"); it != document.end()) {
        if (!it->is_array()) {
            throw InstanceError("'Y': expected an array of labels");
        }
        std::vector<std::string> labels;
        for (size_t i = 0; i < it->size(); ++i) {
            labels.push_back(require_string((*it)[i], "Y[" + std::to_string(i) + "]"));
        }
        y = std::move(labels);
    }
    std::optional<std::string> x0;
    if (auto it = document.find("x0"); it != document.end()) {
        x0 = require_string(*it, "x0");
    }
    std::optional<Rational> k;
    if (auto it = document.find("k"); it != document.end()) {
        k = parse_rational(require_string(*it, "k"));
    }
    std::optional<IntegrandSpec> rho;
    if (auto it = document.find("rho"); it != document.end()) {
        rho = parse_rho(*it);
    }
    return Instance::create(std::move(space), std::move(relation), std::move(map), std::move(y),
                            std::move(x0), std::move(k), std::move(rho));
}

Instance load_instance(const std::filesystem::path& path, bool strict) {
    return parse_instance(read_file(path), strict);
}

FiniteDistanceSpace parse_space_document(std::string_view jsonText, bool strict) {
    const json document = parse_json(jsonText);
    if (!document.is_object()) {
        throw InstanceError("instance document must be a JSON object");
    }
    reject_unknown_keys(document, kInstanceKeys);
    Carrier carrier = parse_points(document);
    return parse_sigma(document, std::move(carrier), strict);
}

FiniteDistanceSpace load_space_document(const std::filesystem::path& path, bool strict) {
    return parse_space_document(read_file(path), strict);
}

std::string serialize_instance(const Instance& instance) {
    const auto& carrier = instance.space().carrier();
    ordered_json document;
    document["points"] = carrier.labels();

    ordered_json sigma = ordered_json::array();
    for (int i = 0; i < carrier.size(); ++i) {
        for (int j = i; j < carrier.size(); ++j) {
            sigma.push_back(
                {carrier.label(i), carrier.label(j), to_string(instance.space().dist(i, j))});
        }
    }
    document["sigma"] = std::move(sigma);

    ordered_json relation = ordered_json::array();
    for (const auto& [x, y] : instance.relation().pairs()) {
        relation.push_back({x, y});
    }
    document["relation"] = std::move(relation);

    ordered_json map = ordered_json::object();
    for (int i = 0; i < carrier.size(); ++i) {
        map[carrier.label(i)] = instance.map().apply(std::string_view(carrier.label(i)));
    }
    document["map"] = std::move(map);

    document["Y"] = instance.Y();
    if (instance.x0()) document["x0"] = *instance.x0();
    if (instance.k()) document["k"] = to_string(*instance.k());
    if (instance.rho()) document["rho"] = rho_to_json(*instance.rho());

    return document.dump(2) + "\n";
}

} // namespace relfix
