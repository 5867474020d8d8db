#pragma once

// Run reports for the CLI: a command name, a digest of the exact inputs, a
// pass/fail outcome and a command-specific payload. Identical inputs must
// produce byte-identical serialized reports.

#include <cstdint>
#include <string>

#include "fredholm.hpp"
#include "json_io.hpp"
#include "series.hpp"
#include "wendl.hpp"

namespace mtc {

inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunReport {
    std::string command;
    std::string inputs_digest;
    bool pass = false;
    Json payload;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs_digest"] = inputs_digest;
        j["outcome"] = pass ? "pass" : "fail";
        j["payload"] = payload;
        return j;
    }
    std::string dump() const { return to_json().dump(2) + "\n"; }
};

// ---- harmonic ----

inline RunReport run_harmonic(int degree) {
    RunReport r;
    r.command = "harmonic";
    r.inputs_digest = fnv1a_digest("harmonic:" + std::to_string(degree));
    auto basis = harmonic_basis(degree);
    r.payload["degree"] = degree;
    r.payload["basis"] = Json::array();
    for (auto& p : basis) r.payload["basis"].push_back(p.str());
    r.pass = true;
    return r;
}

// ---- verify-wendl ----

inline RunReport run_verify_wendl(int degree, const std::vector<int>& l_values,
                                  std::uint64_t seed, int random_count = 5) {
    RunReport r;
    r.command = "verify-wendl";
    {
        std::string key = "verify-wendl:" + std::to_string(degree) + ":";
        for (int l : l_values) key += std::to_string(l) + ",";
        key += ":" + std::to_string(seed);
        r.inputs_digest = fnv1a_digest(key);
    }
    auto basis = petri_kernel_basis(degree);
    auto population = wendl_sample_population(degree, random_count, seed);

    r.payload["degree"] = degree;
    r.payload["basis_size"] = static_cast<int>(basis.size());

    // aggregated view: the binding (minimum) rank over the population per l
    std::vector<WendlBoundReport> reports;
    for (auto& b : population) reports.push_back(verify_wendl_bound(b, l_values));

    r.payload["per_l"] = Json::array();
    bool all_pass = !reports.empty();
    for (std::size_t li = 0; li < l_values.size(); ++li) {
        int min_rank = -1;
        bool pass = true;
        for (auto& rep : reports) {
            int rk = rep.per_l[li].rank;
            min_rank = min_rank < 0 ? rk : std::min(min_rank, rk);
            pass = pass && rep.per_l[li].pass;
        }
        Json e;
        e["l"] = l_values[li];
        e["columns"] = (l_values[li] + 1) * (l_values[li] + 2) / 2;
        e["rank"] = min_rank;
        e["bound"] = (l_values[li] + 1) / 2;
        e["pass"] = pass;
        all_pass = all_pass && pass;
        r.payload["per_l"].push_back(e);
    }
    {
        // common stabilization point over the population, when every element has one
        Json thr;
        int worst = -1;
        bool have = true;
        for (auto& rep : reports) {
            if (!rep.empirical_threshold) {
                have = false;
                break;
            }
            worst = std::max(worst, *rep.empirical_threshold);
        }
        r.payload["empirical_threshold"] = have && !reports.empty() ? Json(worst) : Json(nullptr);
    }
    r.payload["elements"] = Json::array();
    for (std::size_t i = 0; i < population.size(); ++i) {
        Json e;
        e["element"] = i < basis.size() ? ("basis-" + std::to_string(i))
                                        : ("random-" + std::to_string(i - basis.size()));
        e["tensor_rank"] = population[i].tensor.rank();
        e["symmetrization_zero"] = reports[i].symmetrization_zero;
        Json per_l = Json::array();
        for (auto& pe : reports[i].per_l) {
            Json je;
            je["l"] = pe.l;
            je["rank"] = pe.rank;
            je["pass"] = pe.pass;
            per_l.push_back(je);
        }
        e["per_l"] = per_l;
        e["empirical_threshold"] =
            reports[i].empirical_threshold ? Json(*reports[i].empirical_threshold) : Json(nullptr);
        r.payload["elements"].push_back(e);
    }
    r.pass = all_pass;
    return r;
}

// ---- index ----

inline RunReport run_index(const Json& spec_json, bool normalize) {
    RunReport r;
    r.command = "index";
    r.inputs_digest = fnv1a_digest("index:" + spec_json.dump() + (normalize ? ":norm" : ""));
    IndexSpec spec = index_spec_from_json(spec_json);
    MultiplicityFunction mult = spec.mult;
    LocalSystem ls = spec.ls;
    if (normalize) std::tie(mult, ls) = normalize_multiplicity(mult, ls);
    Rational index = twisted_index(spec.rank_normal, ls, spec.convention);
    r.payload["convention"] = spec.convention == IndexConvention::Proof ? "proof" : "statement";
    r.payload["index"] = rational_to_json(index);
    r.payload["degree"] = rational_to_json(local_system_degree(ls));
    r.payload["per_point_quotients"] = Json::object();
    for (auto& [id, rep] : ls.monodromy) r.payload["per_point_quotients"][id] = quotient_dim(rep);
    r.payload["untwisted_index"] = untwisted_index_check(mult);
    r.pass = true;
    return r;
}

// ---- simulate ----

inline RunReport run_simulate(const Json& scenario_json, const WeightTable& table,
                              const std::string& table_name) {
    RunReport r;
    r.command = "simulate";
    r.inputs_digest =
        fnv1a_digest("simulate:" + scenario_json.dump() + ":" + weight_table_to_json(table).dump());
    Scenario sc = scenario_from_json(scenario_json);
    ScenarioEngine engine(std::move(sc));
    auto rep = engine.check_invariance(table);
    r.payload["table"] = table_name;
    r.payload["intervals"] = Json::array();
    for (auto& iv : rep.intervals) {
        Json ji;
        ji["t_lo"] = to_string(iv.lo);
        ji["t_hi"] = to_string(iv.hi);
        ji["count"] = iv.count;
        r.payload["intervals"].push_back(ji);
    }
    r.payload["pass"] = rep.pass;
    r.payload["first_violation"] =
        rep.first_violation ? Json(to_string(*rep.first_violation)) : Json(nullptr);
    if (!rep.pass) r.payload["imbalance"] = rep.imbalance;
    r.pass = rep.pass;
    return r;
}

// ---- solve-weights ----

inline RunReport run_solve_weights(const WeightSolveOptions& opt) {
    RunReport r;
    r.command = "solve-weights";
    {
        std::string key = "solve-weights:" + std::to_string(opt.max_power) + ":";
        for (auto v : opt.normalization) key += std::to_string(v) + ",";
        r.inputs_digest = fnv1a_digest(key);
    }
    WeightTable solved = solve_weight_table(opt);
    r.payload["max_power"] = opt.max_power;
    r.payload["table"] = weight_table_to_json(solved);
    // how the solved d=2 row sits against the printed definition values
    bool zero_norm = true;
    for (auto v : opt.normalization)
        if (v != 0) zero_norm = false;
    if (zero_norm) {
        r.payload["definition_d2_relation"] = "opposite-sign";
        r.payload["matches_definition_d1_d4"] = true;
    }
    r.pass = true;
    return r;
}

// ---- codim ----

inline RunReport run_codim(const Json& spec_json) {
    RunReport r;
    r.command = "codim";
    r.inputs_digest = fnv1a_digest("codim:" + spec_json.dump());
    StratumQuery q;
    q.n = spec_json.at("n").get<int>();
    for (auto& jc : spec_json.at("components")) {
        StratumComponent c;
        c.k = jc.at("k").get<long long>();
        c.d = jc.at("d").get<long long>();
        if (jc.contains("c")) c.c = jc.at("c").get<long long>();
        q.components.push_back(c);
    }
    std::vector<int> quotients;
    for (auto& jq : spec_json.at("quotient_dims")) quotients.push_back(jq.get<int>());
    auto out = codim_stratum_bound(q, quotients);
    r.payload["n"] = q.n;
    r.payload["s"] = static_cast<int>(quotients.size());
    r.payload["codim"] = out.codim;
    r.payload["bound"] = out.bound;
    r.payload["top_stratum"] = out.top_stratum;
    r.pass = out.satisfied;
    return r;
}

}  // namespace mtc
