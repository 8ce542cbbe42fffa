#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dgbo/dispersion.hpp"
#include "dgbo/estimates.hpp"
#include "dgbo/experiments.hpp"
#include "dgbo/resonance.hpp"
#include "dgbo/solver.hpp"

namespace dgbo {

// Embedded in every output file.
struct OutputMeta {
    std::string config_echo;
    std::uint64_t seed = 0;
    std::string version = DGBO_VERSION;
    std::string bump_profile;
};

OutputMeta make_meta(std::string config_echo, std::uint64_t seed);

std::string run_to_json(const RunRecord& rec, const OutputMeta& meta);
RunRecord run_from_json(std::string_view text);
OutputMeta meta_from_json(std::string_view text);
// Header `t,mean,mass,hamiltonian,hs_norm[s=...]...` after `# key: value` lines.
std::string run_to_csv(const RunRecord& rec, const OutputMeta& meta);

std::string constant_report_to_json(const ConstantReport& rep, bool pass, const OutputMeta& meta);
std::string condition_report_to_json(const ConditionReport& rep, const OutputMeta& meta);
std::string sweeps_to_json(const std::vector<ConvolutionSweep>& sweeps, const OutputMeta& meta);
std::string scenario_report_to_json(const ScenarioReport& rep, const OutputMeta& meta);

void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

} // namespace dgbo
