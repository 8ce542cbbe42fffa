#include "dgbo/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgbo/littlewood_paley.hpp"

namespace dgbo {

using nlohmann::json;

namespace {

json meta_block(const OutputMeta& m) {
    return {{"version", m.version}, {"seed", m.seed}, {"bump_profile", m.bump_profile}, {"config", m.config_echo}};
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Io, std::string("malformed JSON: ") + e.what());
    }
}

json window(const RatioWindow& w) { return {{"lo", w.lo}, {"hi", w.hi}}; }

} // namespace

OutputMeta make_meta(std::string config_echo, std::uint64_t seed) {
    OutputMeta m;
    m.config_echo = std::move(config_echo);
    m.seed = seed;
    m.bump_profile = kBumpProfileId;
    return m;
}

std::string run_to_json(const RunRecord& rec, const OutputMeta& meta) {
    json records = json::array();
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        const auto& d = rec.diagnostics[i];
        records.push_back({{"t", rec.times[i]},
                           {"mean", d.mean},
                           {"mass", d.mass},
                           {"hamiltonian", d.hamiltonian},
                           {"hs_norms", d.hs_norms}});
    }
    json j = {{"meta", meta_block(meta)},
              {"kind", "run"},
              {"s_list", rec.s_list},
              {"dt_used", rec.dt_used},
              {"steps", rec.steps},
              {"records", records}};
    return j.dump(2) + "\n";
}

RunRecord run_from_json(std::string_view text) {
    json j = parse_json(text);
    RunRecord rec;
    try {
        require(j.value("kind", "") == "run", ErrorKind::Io, "JSON document is not a run record");
        rec.s_list = j.at("s_list").get<std::vector<double>>();
        rec.dt_used = j.at("dt_used").get<double>();
        rec.steps = j.at("steps").get<long>();
        for (const auto& r : j.at("records")) {
            rec.times.push_back(r.at("t").get<double>());
            DiagRecord d;
            d.mean = r.at("mean").get<double>();
            d.mass = r.at("mass").get<double>();
            d.hamiltonian = r.at("hamiltonian").get<double>();
            d.hs_norms = r.at("hs_norms").get<std::vector<double>>();
            rec.diagnostics.push_back(std::move(d));
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::Io, std::string("run record is missing fields: ") + e.what());
    }
    return rec;
}

OutputMeta meta_from_json(std::string_view text) {
    json j = parse_json(text);
    OutputMeta m;
    try {
        const json& b = j.at("meta");
        m.version = b.at("version").get<std::string>();
        m.seed = b.at("seed").get<std::uint64_t>();
        m.bump_profile = b.at("bump_profile").get<std::string>();
        m.config_echo = b.at("config").get<std::string>();
    } catch (const json::exception& e) {
        fail(ErrorKind::Io, std::string("meta block is incomplete: ") + e.what());
    }
    return m;
}

std::string run_to_csv(const RunRecord& rec, const OutputMeta& meta) {
    std::string out;
    out += "# version: " + meta.version + "\n";
    out += "# seed: " + std::to_string(meta.seed) + "\n";
    out += "# bump_profile: " + meta.bump_profile + "\n";
    std::istringstream cfg(meta.config_echo);
    for (std::string line; std::getline(cfg, line);)
        if (!line.empty()) out += "# config: " + line + "\n";
    out += "t,mean,mass,hamiltonian";
    for (double s : rec.s_list) {
        char buf[48];
        std::snprintf(buf, sizeof buf, ",hs_norm[s=%g]", s);
        out += buf;
    }
    out += "\n";
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        const auto& d = rec.diagnostics[i];
        out += g17(rec.times[i]) + "," + g17(d.mean) + "," + g17(d.mass) + "," + g17(d.hamiltonian);
        for (double h : d.hs_norms) out += "," + g17(h);
        out += "\n";
    }
    return out;
}

std::string constant_report_to_json(const ConstantReport& rep, bool pass, const OutputMeta& meta) {
    json scales = json::array();
    for (const auto& s : rep.per_scale)
        scales.push_back(
            {{"scale", s.scale}, {"max_ratio", s.max_ratio}, {"min_ratio", s.min_ratio}, {"tuples", s.tuples}});
    const Scales& k = rep.argmax_scales;
    json j = {{"meta", meta_block(meta)},
              {"kind", "constant"},
              {"case", rep.case_id},
              {"alpha", rep.alpha},
              {"max_ratio", rep.max_ratio},
              {"min_ratio", rep.min_ratio},
              {"argmax", rep.argmax},
              {"argmax_scales", {{"k1", k.k1}, {"k2", k.k2}, {"k3", k.k3}, {"ka", k.ka}, {"kb", k.kb}}},
              {"per_scale", scales},
              {"stability_delta", rep.stability_delta},
              {"slope", rep.slope},
              {"tuples", rep.tuples},
              {"subsampled", rep.subsampled},
              {"seed", rep.seed},
              {"pass", pass}};
    return j.dump(2) + "\n";
}

std::string condition_report_to_json(const ConditionReport& r, const OutputMeta& meta) {
    json j = {{"meta", meta_block(meta)},
              {"kind", "dispersion_conditions"},
              {"spec", r.spec_name},
              {"alpha", r.alpha},
              {"kappa", r.kappa},
              {"xi_max", r.xi_max},
              {"growth", window(r.growth)},
              {"first_derivative", window(r.first)},
              {"second_derivative", window(r.second)},
              {"resonance", window(r.resonance)},
              {"growth_doubled", window(r.growth_doubled)},
              {"first_derivative_doubled", window(r.first_doubled)},
              {"second_derivative_doubled", window(r.second_doubled)},
              {"resonance_doubled", window(r.resonance_doubled)},
              {"max_shift", r.max_shift},
              {"scan_size", r.scan_size},
              {"note", r.note},
              {"pass", r.pass}};
    return j.dump(2) + "\n";
}

std::string sweeps_to_json(const std::vector<ConvolutionSweep>& sweeps, const OutputMeta& meta) {
    json arr = json::array();
    for (const auto& s : sweeps) {
        json scales = json::array();
        for (const auto& c : s.scales)
            scales.push_back({{"scale", c.scale},
                              {"l", c.l},
                              {"k", c.k},
                              {"max_ratio", c.max_ratio},
                              {"mean_ratio", c.mean_ratio},
                              {"samples", c.samples}});
        arr.push_back({{"family", s.family},
                       {"variant", s.variant == BoundVariant::Generic ? "generic" : "improved"},
                       {"alpha", s.alpha},
                       {"scales", scales},
                       {"slope", s.slope},
                       {"pass", s.pass}});
    }
    bool pass = !sweeps.empty();
    for (const auto& s : sweeps) pass = pass && s.pass;
    json j = {{"meta", meta_block(meta)}, {"kind", "convolution"}, {"sweeps", arr}, {"pass", pass}};
    return j.dump(2) + "\n";
}

std::string scenario_report_to_json(const ScenarioReport& rep, const OutputMeta& meta) {
    json ratios = json::array();
    for (const auto& r : rep.ratios)
        ratios.push_back({{"label", r.label},
                          {"numerator", r.numerator},
                          {"denominator", r.denominator},
                          {"ratio", r.ratio},
                          {"degenerate", r.degenerate}});
    json stats = json::object();
    for (const auto& [k, v] : rep.stats) stats[k] = v;
    json j = {{"meta", meta_block(meta)},
              {"kind", "scenario"},
              {"scenario", to_string(rep.kind)},
              {"alpha", rep.alpha},
              {"ratios", ratios},
              {"stats", stats},
              {"has_verdict", rep.has_verdict},
              {"pass", rep.pass},
              {"blow_up", rep.blow_up},
              {"note", rep.note},
              {"runs", rep.runs.size()}};
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::Io, "cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    require(static_cast<bool>(out), ErrorKind::Io, "failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::Io, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace dgbo
