#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgbo/experiments.hpp"
#include "dgbo/solver.hpp"

namespace dgbo {

struct SolverSection {
    double alpha = 0.5;
    std::string dispersion = "fractional";  // fractional | whitham
    double whitham_tau = 1.0;
    double kappa = 10.0;
    int n_points = 256;
    double horizon = 0.5;
    double dt = 1e-3;
    std::string dt_policy = "cfl";     // cfl | fixed
    std::string integrator = "etdrk4"; // etdrk4 | ifrk4
    int record_every = 1;
    std::vector<double> s_list{1.1};
    bool operator==(const SolverSection&) const = default;
};

struct ScenarioSection {
    std::string kind = "apriori";
    double s = 1.1;
    double r = 1.1;
    int n_data = 20;
    double norm_target = 1.0;
    std::vector<int> n_grid{3, 4, 5, 6, 7};
    std::vector<int> lambda_grid{2, 4};
    std::vector<double> c_grid{0.3, 1.0};
    double delta = 1e-3;
    double ratio_cap = 10.0;
    double tolerance = 1e-8;
    std::vector<int> packet_freqs{16, 32, 64};
    bool operator==(const ScenarioSection&) const = default;
};

struct VerifierSection {
    std::string case_id = "resonance";
    int kmax = 8;
    double budget = 1e7;
    double alpha = 0.5;
    int seeds = 200;
    bool operator==(const VerifierSection&) const = default;
};

struct DataSection {
    std::string kind = "random";  // random | modes
    std::vector<std::pair<long, double>> cos_modes;
    std::vector<std::pair<long, double>> sin_modes;
    double s = 1.1;
    double norm = 1.0;
    bool operator==(const DataSection&) const = default;
};

struct Config {
    std::uint64_t seed = 1;
    SolverSection solver;
    ScenarioSection scenario;
    VerifierSection verifier;
    DataSection data;
    bool operator==(const Config&) const = default;
};

// Flat `section.key = value` lines; '#' starts a comment. Throws Config errors with line/column.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);
// Every key, in a fixed order, with round-trip precision.
std::string serialize_config(const Config& cfg);
void validate_config(const Config& cfg);

DispersionSpec make_dispersion(const SolverSection& s);
SolverConfig to_solver_config(const Config& cfg);
SpectralField initial_datum(const Config& cfg);
ScenarioConfig to_scenario_config(const Config& cfg);

} // namespace dgbo
