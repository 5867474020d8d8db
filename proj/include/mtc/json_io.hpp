#pragma once

// JSON wire formats. All numbers that can be non-integral travel as exact
// "p/q" strings; reports use ordered_json so repeated runs serialize to
// byte-identical output.

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "orbifold.hpp"
#include "scenario.hpp"

namespace mtc {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw std::invalid_argument(what + ": floating-point values are not accepted; use \"p/q\"");
    throw std::invalid_argument(what + ": expected an integer or a \"p/q\" string");
}

inline Json rational_to_json(const Rational& r) {
    if (den(r) == 1) {
        // keep plain integers readable when they fit
        if (num(r) >= std::numeric_limits<long long>::min() &&
            num(r) <= std::numeric_limits<long long>::max())
            return Json(static_cast<long long>(num(r)));
    }
    return Json(to_string(r));
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

// ---- sign maps and scenarios ----

inline DeltaMap delta_from_json(const Json& j) {
    DeltaMap d;
    for (int i = 0; i < 4; ++i) {
        Z2Class c(i);
        if (!j.contains(c.key()))
            throw std::invalid_argument("delta map: missing class '" + c.key() + "'");
        int s = j.at(c.key()).get<int>();
        d.set(c, s);
    }
    return d;
}

inline Json delta_to_json(const DeltaMap& d) {
    Json j;
    for (int i = 0; i < 4; ++i) {
        Z2Class c(i);
        j[c.key()] = d.at(c);
    }
    return j;
}

inline Scenario scenario_from_json(const Json& j) {
    Scenario sc;
    for (auto& js : j.at("strands")) {
        Strand s;
        s.id = js.at("id").get<std::string>();
        s.birth = rational_from_json(js.at("birth"), "strand birth");
        s.death = rational_from_json(js.at("death"), "strand death");
        s.delta0 = delta_from_json(js.at("delta0"));
        sc.strands.push_back(std::move(s));
    }
    for (auto& je : j.at("events")) {
        Event e;
        std::string kind = je.at("kind").get<std::string>();
        e.t = rational_from_json(je.at("t"), "event time");
        std::string side = je.at("side").get<std::string>();
        if (side == "left") e.side = EventSide::Left;
        else if (side == "right") e.side = EventSide::Right;
        else throw std::invalid_argument("event side must be 'left' or 'right'");
        if (kind == "birth_death") {
            e.kind = Event::Kind::BirthDeath;
            e.plus_id = je.at("plus").get<std::string>();
            e.minus_id = je.at("minus").get<std::string>();
        } else if (kind == "doubling") {
            e.kind = Event::Kind::Doubling;
            e.base_id = je.at("base").get<std::string>();
            e.child_id = je.at("child").get<std::string>();
            e.iota0 = Z2Class::from_key(je.at("iota0").get<std::string>());
        } else {
            throw std::invalid_argument("unknown event kind '" + kind + "'");
        }
        sc.events.push_back(std::move(e));
    }
    for (auto& jsel : j.at("selection")) {
        SelectionEntry s;
        s.strand = jsel.at("strand").get<std::string>();
        s.degree = jsel.at("degree").get<int>();
        s.multiplicity = jsel.at("multiplicity").get<long long>();
        sc.selection.push_back(std::move(s));
    }
    return sc;
}

inline Json scenario_to_json(const Scenario& sc) {
    Json j;
    j["strands"] = Json::array();
    for (auto& s : sc.strands) {
        Json js;
        js["id"] = s.id;
        js["birth"] = to_string(s.birth);
        js["death"] = to_string(s.death);
        js["delta0"] = delta_to_json(s.delta0);
        j["strands"].push_back(js);
    }
    j["events"] = Json::array();
    for (auto& e : sc.events) {
        Json je;
        je["kind"] = e.kind == Event::Kind::BirthDeath ? "birth_death" : "doubling";
        je["t"] = to_string(e.t);
        je["side"] = e.side == EventSide::Left ? "left" : "right";
        if (e.kind == Event::Kind::BirthDeath) {
            je["plus"] = e.plus_id;
            je["minus"] = e.minus_id;
        } else {
            je["base"] = e.base_id;
            je["child"] = e.child_id;
            je["iota0"] = e.iota0.key();
        }
        j["events"].push_back(je);
    }
    j["selection"] = Json::array();
    for (auto& s : sc.selection) {
        Json js;
        js["strand"] = s.strand;
        js["degree"] = s.degree;
        js["multiplicity"] = s.multiplicity;
        j["selection"].push_back(js);
    }
    return j;
}

// ---- weight tables ----

inline WeightTable weight_table_from_json(const Json& j) {
    std::map<int, WeightTable::Row> plus;
    for (auto& [key, row] : j.at("plus").items()) {
        int d = std::stoi(key);
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("weight table rows have four entries (k = 0..3)");
        WeightTable::Row r{};
        for (int k = 0; k < 4; ++k) r[static_cast<std::size_t>(k)] = row.at(static_cast<std::size_t>(k)).get<long long>();
        plus[d] = r;
    }
    return WeightTable(plus);
}

inline Json weight_table_to_json(const WeightTable& t) {
    Json j;
    j["plus"] = Json::object();
    for (auto& [d, row] : t.plus_rows()) {
        Json r = Json::array();
        for (long long v : row) r.push_back(v);
        j["plus"][std::to_string(d)] = r;
    }
    return j;
}

// ---- local systems ----

struct IndexSpec {
    long long rank_normal = 0;
    IndexConvention convention = IndexConvention::Proof;
    MultiplicityFunction mult;
    LocalSystem ls;
};

inline IndexSpec index_spec_from_json(const Json& j) {
    IndexSpec spec;
    spec.rank_normal = j.at("rank_normal").get<long long>();
    if (j.contains("convention")) {
        std::string c = j.at("convention").get<std::string>();
        if (c == "statement") spec.convention = IndexConvention::Statement;
        else if (c == "proof") spec.convention = IndexConvention::Proof;
        else throw std::invalid_argument("convention must be 'statement' or 'proof'");
    }
    int rank = -1;
    for (auto& jp : j.at("points")) {
        std::string id = jp.at("id").get<std::string>();
        CyclicRep rep;
        rep.order = jp.at("order").get<int>();
        for (auto& w : jp.at("weights")) rep.weights.push_back(w.get<int>());
        if (rank < 0) rank = static_cast<int>(rep.weights.size());
        spec.mult.points[id] = rep.order;
        spec.ls.monodromy[id] = rep;
    }
    spec.ls.rank = rank < 0 ? 0 : rank;
    spec.ls.validate_against(spec.mult);
    return spec;
}

}  // namespace mtc
