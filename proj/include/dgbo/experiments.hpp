#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgbo/solver.hpp"

namespace dgbo {

enum class ScenarioKind { Apriori, DifferenceLow, DifferenceHs, BonaSmith, Galilean, Scaling, ThresholdProbe };

const char* to_string(ScenarioKind kind);
ScenarioKind parse_scenario(const std::string& name);

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Apriori;
    SolverConfig solver;
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
    std::uint64_t seed = 1;
    // Replaces the random data when set.
    std::optional<SpectralField> datum;
};

struct RatioEntry {
    std::string label;
    double numerator = 0.0;
    double denominator = 0.0;
    double ratio = 0.0;
    bool degenerate = false;  // 0/0
};

struct ScenarioReport {
    ScenarioKind kind = ScenarioKind::Apriori;
    double alpha = 0.0;
    std::vector<RatioEntry> ratios;
    std::vector<std::pair<std::string, double>> stats;
    bool has_verdict = true;  // false for exploratory probes
    bool pass = false;
    bool blow_up = false;
    std::string note;
    std::vector<RunRecord> runs;

    double stat(const std::string& key) const;
};

// Mean-zero real field with <xi>^{-s-1} Gaussian coefficients on the dealiased band, scaled to H^s norm.
SpectralField random_smooth_datum(const TorusGrid& grid, double s, double norm_target, std::uint64_t seed);

// Packet centred at frequency n0 with relative width 1/8, scaled to H^s norm.
SpectralField wave_packet(const TorusGrid& grid, int n0, double s, double norm_target);

void validate(const ScenarioConfig& cfg);
ScenarioReport run_scenario(const ScenarioConfig& cfg);

// max_t || S(u0+c)(t,.) - S(u0)(t,.+2ct) - c ||_{L2} with one step size shared by both runs.
double galilean_residual(const SpectralField& u0, double c, const SolverConfig& cfg);

} // namespace dgbo
