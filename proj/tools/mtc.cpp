// mtc: exact verification runs for the minimal-torus counting calculus.
// Every subcommand prints a JSON run report on stdout; exit status is 0
// exactly when the outcome is "pass".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mtc/report.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MTC_SEED")) return std::stoull(env);
    return 0x6d7463ULL;
}

void emit(const mtc::RunReport& report, const std::string& json_path) {
    std::string text = report.dump();
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text;
    }
}

mtc::WeightTable resolve_table(const std::string& source) {
    if (source == "canonical") return mtc::WeightTable::canonical();
    if (source == "derived") return mtc::solve_weight_table({});
    if (source == "definition") return mtc::WeightTable::definition();
    return mtc::weight_table_from_json(mtc::load_json_file(source));
}

std::vector<int> parse_l_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for the torus counting calculus"};
    app.require_subcommand(1);
    app.fallthrough();  // parent flags like --json may follow the subcommand

    std::string json_path;
    app.add_option("--json", json_path, "also write the report to this path");

    // harmonic
    auto* harmonic = app.add_subcommand("harmonic", "homogeneous harmonic basis at a degree");
    int h_degree = 0;
    harmonic->add_option("--degree", h_degree, "degree d >= 0")->required()->check(CLI::NonNegativeNumber);

    // verify-wendl
    auto* wendl = app.add_subcommand("verify-wendl", "rank lower bound of the truncated map");
    int w_degree = 1;
    std::string w_l;
    std::uint64_t w_seed = default_seed();
    wendl->add_option("--degree", w_degree, "kernel degree d")->required()->check(CLI::PositiveNumber);
    wendl->add_option("--l", w_l, "comma-separated truncation orders, each >= 10d+6")->required();
    wendl->add_option("--seed", w_seed, "seed for the random kernel combinations");

    // index
    auto* index = app.add_subcommand("index", "twisted index from a local-system spec");
    std::string i_spec;
    std::string i_convention;
    bool i_normalize = false;
    index->add_option("spec", i_spec, "JSON spec file")->required()->check(CLI::ExistingFile);
    index->add_option("--convention", i_convention, "statement|proof (overrides the value in the spec file)");
    index->add_flag("--normalize", i_normalize, "drop points with trivial monodromy first");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "count invariance over a scenario");
    std::string s_file, s_table = "canonical";
    simulate->add_option("scenario", s_file, "scenario JSON file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--table", s_table, "canonical|derived|definition|<path>");

    // solve-weights
    auto* solve = app.add_subcommand("solve-weights", "solve the ledger relations for the table");
    int sw_max_power = 4;
    std::string sw_norm;
    solve->add_option("--max-power", sw_max_power, "solve degrees 2..2^max_power")->check(CLI::PositiveNumber);
    solve->add_option("--norm", sw_norm, "comma-separated normalization for n^{2^j}_{+0}");

    // codim
    auto* codim = app.add_subcommand("codim", "stratum codimension and bound");
    std::string c_spec;
    codim->add_option("--spec", c_spec, "JSON stratum query")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        mtc::RunReport report;
        if (*harmonic) {
            report = mtc::run_harmonic(h_degree);
        } else if (*wendl) {
            report = mtc::run_verify_wendl(w_degree, parse_l_list(w_l), w_seed);
        } else if (*index) {
            mtc::Json spec = mtc::load_json_file(i_spec);
            if (!i_convention.empty()) spec["convention"] = i_convention;
            report = mtc::run_index(spec, i_normalize);
        } else if (*simulate) {
            report = mtc::run_simulate(mtc::load_json_file(s_file), resolve_table(s_table), s_table);
        } else if (*solve) {
            mtc::WeightSolveOptions opt;
            opt.max_power = sw_max_power;
            if (!sw_norm.empty())
                for (int v : parse_l_list(sw_norm)) opt.normalization.push_back(v);
            report = mtc::run_solve_weights(opt);
        } else if (*codim) {
            report = mtc::run_codim(mtc::load_json_file(c_spec));
        }
        emit(report, json_path);
        return report.pass ? 0 : 1;
    } catch (const std::exception& e) {
        mtc::Json err;
        err["outcome"] = "error";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
