#include "dstrat/theory_config.hpp"

#include "dstrat/text_util.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dstrat {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("theory config: " + what); }

BivarPoly poly_from_json(const json& j) {
    if (j.is_string()) return parse_bivar_poly(j.get<std::string>());
    if (!j.is_object()) bad("leaf 'poly' must be an object or a string");
    BivarPoly p;
    for (const auto& [key, val] : j.items()) {
        const auto parts = split(key, ',');
        if (parts.size() != 2) bad("monomial key '" + key + "' is not of the form \"i,j\"");
        const int i = parse_int(parts[0]), jj = parse_int(parts[1]);
        if (i < 0 || jj < 0) bad("negative exponent in '" + key + "'");
        Rational c;
        if (val.is_string())
            c = parse_rational(val.get<std::string>());
        else if (val.is_number_integer())
            c = Rational(val.get<long long>());
        else if (val.is_number())
            c = rational_from_double(val.get<double>());
        else
            bad("coefficient of '" + key + "' must be a rational string or number");
        p.add_term(c, i, jj);
    }
    return p;
}

json poly_to_json(const BivarPoly& p) {
    json j = json::object();
    for (const auto& [m, c] : p.terms()) j[std::to_string(m.i) + "," + std::to_string(m.j)] = to_string(c);
    return j;
}

json betti_to_json(const StratumBetti& b) {
    json j = json::array({b.b0, b.b1});
    if (b.component_b1) j.push_back(*b.component_b1);
    return j;
}

StratumBetti betti_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() < 2 || j.size() > 3) bad(where + " must be [b0, b1] or [b0, b1, [per-component b1]]");
    StratumBetti b;
    b.b0 = j.at(0).get<int>();
    b.b1 = j.at(1).get<int>();
    if (j.size() == 3) b.component_b1 = j.at(2).get<std::vector<int>>();
    return b;
}

TheoryTopology topology_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where + " must be an object");
    TheoryTopology t;
    for (StratumKind k : kAllStrata) {
        const std::string key = short_name(k);
        if (j.contains(key)) t[k] = betti_from_json(j.at(key), where + "." + key);
    }
    return t;
}

json topology_to_json(const TheoryTopology& t) {
    json j = json::object();
    for (StratumKind k : kAllStrata) j[short_name(k)] = betti_to_json(t[k]);
    return j;
}

}  // namespace

RegionExpr region_from_json(const json& j) {
    if (!j.is_object() || !j.contains("op")) bad("region node needs an 'op'");
    const std::string op = j.at("op").get<std::string>();
    if (op == "leaf") {
        BivarPoly p = poly_from_json(j.at("poly"));
        const std::string rel = j.at("rel").get<std::string>();
        if (rel == "<") return RegionExpr::leaf(std::move(p), Relation::Less);
        if (rel == "<=" || rel == "≤") return RegionExpr::leaf(std::move(p), Relation::LessEq);
        if (rel == "=" || rel == "==") return RegionExpr::leaf(std::move(p), Relation::Equal);
        if (rel == ">") return RegionExpr::leaf(-p, Relation::Less);
        if (rel == ">=" || rel == "≥") return RegionExpr::leaf(-p, Relation::LessEq);
        bad("unknown relation '" + rel + "'");
    }
    if (!j.contains("children") || !j.at("children").is_array()) bad("'" + op + "' node needs a children array");
    std::vector<RegionExpr> kids;
    for (const auto& c : j.at("children")) kids.push_back(region_from_json(c));
    if (op == "and") return RegionExpr::all_of(std::move(kids));
    if (op == "or") return RegionExpr::any_of(std::move(kids));
    if (op == "not") {
        if (kids.size() != 1) bad("'not' takes exactly one child");
        return RegionExpr::negation(std::move(kids.front()));
    }
    bad("unknown op '" + op + "'");
}

json region_to_json(const RegionExpr& r) {
    switch (r.kind()) {
        case RegionExpr::Kind::Leaf:
            return json{{"op", "leaf"}, {"poly", poly_to_json(r.leaf_data().poly)}, {"rel", to_string(r.leaf_data().rel)}};
        case RegionExpr::Kind::Not: return json{{"op", "not"}, {"children", json::array({region_to_json(r.children()[0])})}};
        case RegionExpr::Kind::And:
        case RegionExpr::Kind::Or: {
            json kids = json::array();
            for (const auto& c : r.children()) kids.push_back(region_to_json(c));
            return json{{"op", r.kind() == RegionExpr::Kind::And ? "and" : "or"}, {"children", kids}};
        }
    }
    return json();
}

StabilityTheory theory_from_json(const json& j) {
    if (!j.is_object()) bad("top level must be an object");
    try {
        StabilityTheory t;
        t.name = j.value("name", std::string("custom"));
        const std::string mode = j.value("mode", std::string("projective"));
        if (mode == "projective")
            t.mode = TheoryMode::Projective;
        else if (mode == "monic")
            t.mode = TheoryMode::Monic;
        else
            bad("mode must be 'projective' or 'monic'");
        if (j.contains("infinity_stratum")) t.infinity_stratum = parse_stratum(j.at("infinity_stratum").get<std::string>());
        if (j.contains("origin_stratum")) t.origin_stratum = parse_stratum(j.at("origin_stratum").get<std::string>());
        if (!j.contains("region")) bad("missing 'region'");
        t.region = region_from_json(j.at("region"));
        if (!j.contains("topology")) bad("missing 'topology'");
        t.topology = topology_from_json(j.at("topology"), "topology");
        if (j.contains("punctured_topology"))
            t.punctured_topology = topology_from_json(j.at("punctured_topology"), "punctured_topology");
        if (j.contains("adjacency")) {
            std::vector<StratumEdge> edges;
            for (const auto& e : j.at("adjacency")) {
                if (!e.is_array() || e.size() != 2) bad("adjacency edges are [from, to] pairs");
                edges.emplace_back(parse_stratum(e.at(0).get<std::string>()), parse_stratum(e.at(1).get<std::string>()));
            }
            t.adjacency = std::move(edges);
        }
        if (j.contains("unbounded")) {
            std::vector<StratumKind> u;
            for (const auto& e : j.at("unbounded")) u.push_back(parse_stratum(e.get<std::string>()));
            t.unbounded = std::move(u);
        }
        t.boundary_tolerance = j.value("boundary_tolerance", 1e-9);
        if (j.contains("window")) {
            const auto w = j.at("window").get<std::vector<double>>();
            if (w.size() != 4) bad("window is [x0, x1, y0, y1]");
            t.window = Window{w[0], w[1], w[2], w[3]};
        }
        check_theory_structure(t);
        return t;
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

json theory_to_json(const StabilityTheory& t) {
    json j;
    j["name"] = t.name;
    j["mode"] = to_string(t.mode);
    if (t.infinity_stratum) j["infinity_stratum"] = short_name(*t.infinity_stratum);
    if (t.origin_stratum) j["origin_stratum"] = short_name(*t.origin_stratum);
    j["region"] = region_to_json(t.region);
    j["topology"] = topology_to_json(t.topology);
    if (t.punctured_topology) j["punctured_topology"] = topology_to_json(*t.punctured_topology);
    if (t.adjacency) {
        json e = json::array();
        for (const auto& [a, b] : *t.adjacency) e.push_back({short_name(a), short_name(b)});
        j["adjacency"] = e;
    }
    if (t.unbounded) {
        json u = json::array();
        for (auto k : *t.unbounded) u.push_back(short_name(k));
        j["unbounded"] = u;
    }
    j["boundary_tolerance"] = t.boundary_tolerance;
    j["window"] = {t.window.x0, t.window.x1, t.window.y0, t.window.y1};
    return j;
}

StabilityTheory load_theory(const std::string& spec, TheoryMode builtin_mode, std::vector<std::string>* warnings) {
    const auto colon = spec.find(':');
    const std::string base = spec.substr(0, colon);
    bool is_builtin = false;
    for (const auto& n : builtin_theory_names()) is_builtin = is_builtin || n == base;

    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        if (is_builtin && warnings)
            warnings->push_back("config file '" + spec + "' shadows the built-in theory of the same name");
        std::ifstream in(spec);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            bad("cannot parse '" + spec + "': " + e.what());
        }
        return theory_from_json(j);
    }
    if (!is_builtin) throw std::invalid_argument("unknown theory '" + spec + "' (not a built-in name or a file)");
    std::vector<double> params;
    if (colon != std::string::npos) {
        for (const auto& tok : split(spec.substr(colon + 1), ',')) {
            if (base == "poles") {
                const auto z = parse_complex(tok);
                params.push_back(z.real());
                params.push_back(z.imag());
            } else {
                params.push_back(parse_double(tok));
            }
        }
    }
    return builtin_theory(base, params, builtin_mode);
}

}  // namespace dstrat
