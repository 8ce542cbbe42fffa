// dgbo: solver, estimate verifiers and probes from the command line.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

#include "dgbo/config.hpp"
#include "dgbo/estimates.hpp"
#include "dgbo/report_io.hpp"
#include "dgbo/resonance.hpp"

using namespace dgbo;

namespace {

enum Exit { kPass = 0, kFailed = 1, kConfig = 2, kBlowUp = 3, kIo = 4, kOther = 5 };

int exit_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::Config: return kConfig;
    case ErrorKind::BlowUp: return kBlowUp;
    case ErrorKind::Io: return kIo;
    default: return kOther;
    }
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") std::cout << text;
    else write_file(out, text);
}

Config config_or_default(const std::string& path) { return path.empty() ? parse_config("") : load_config(path); }

int cmd_solve(const std::string& config_path, const std::string& out, const std::string& format) {
    Config cfg = config_or_default(config_path);
    OutputMeta meta = make_meta(serialize_config(cfg), cfg.seed);
    RunRecord rec = solve(initial_datum(cfg), to_solver_config(cfg));
    emit(out, format == "csv" ? run_to_csv(rec, meta) : run_to_json(rec, meta));
    std::fprintf(stderr, "solve: %zu records, dt = %.6g, %ld steps\n", rec.times.size(), rec.dt_used, rec.steps);
    return kPass;
}

bool constant_pass(const ConstantReport& r) { return std::isfinite(r.max_ratio) && r.slope <= 0.05; }

int cmd_verify(const std::string& case_id, int kmin, int kmax, std::optional<double> alpha, double budget, int samples,
               std::uint64_t seed, const std::string& out) {
    Config cfg = parse_config("");
    cfg.seed = seed;
    cfg.verifier.case_id = case_id;
    cfg.verifier.kmax = kmax;
    cfg.verifier.budget = budget;
    cfg.verifier.seeds = samples;
    const bool conv = case_id.rfind("conv-", 0) == 0;
    if (conv) {
        const bool improved = case_id.size() > 9 && case_id.substr(case_id.size() - 9) == "-improved";
        std::string base = improved ? case_id.substr(0, case_id.size() - 9) : case_id;
        int arity = base == "conv-tri" ? 3 : base == "conv-quad" ? 4 : 0;
        if (arity == 0) fail(ErrorKind::Config, "unknown convolution case '" + case_id + "'");
        cfg.verifier.alpha = alpha.value_or(improved ? 0.75 : 0.5);
        validate_config(cfg);
        BoxGrid grid;
        grid.dispersion = DispersionSpec::fractional(cfg.verifier.alpha);
        std::vector<ConvolutionSweep> sweeps;
        for (const auto& spec : standard_sweeps(arity, samples, seed,
                                                {improved ? BoundVariant::Improved : BoundVariant::Generic},
                                                std::max(6, kmax)))
            for (auto& s : convolution_sweep(grid, spec)) sweeps.push_back(std::move(s));
        OutputMeta meta = make_meta(serialize_config(cfg), seed);
        emit(out, sweeps_to_json(sweeps, meta));
        bool pass = true;
        for (const auto& s : sweeps) {
            std::fprintf(stderr, "%s %s: slope %.4f %s\n", s.family.c_str(),
                         s.variant == BoundVariant::Generic ? "generic" : "improved", s.slope, s.pass ? "PASS" : "FAIL");
            pass = pass && s.pass;
        }
        return pass ? kPass : kFailed;
    }
    cfg.verifier.alpha = alpha.value_or(0.5);
    validate_config(cfg);
    BoundCase bc = parse_case(case_id);
    bc.alpha = cfg.verifier.alpha;
    bc.k_min = std::min(kmin, kmax);
    bc.k_max = kmax;
    bc.budget = static_cast<std::uint64_t>(budget);
    bc.seed = seed;
    ConstantReport rep = worst_constant(bc);
    bool pass = constant_pass(rep);
    if (bc.id == CaseId::ResonanceAsymptotic) {
        require(kmax >= 2, ErrorKind::Config, "resonance scan needs kmax >= 2");
        BoundCase half = bc;
        half.k_max = kmax - 1;
        ConstantReport prev = worst_constant(half);
        double shift = std::max(std::abs(rep.max_ratio - prev.max_ratio) / prev.max_ratio,
                                std::abs(rep.min_ratio - prev.min_ratio) / prev.min_ratio);
        pass = rep.min_ratio > 0.0 && std::isfinite(rep.max_ratio) && shift <= 0.10;
        std::fprintf(stderr, "resonance window [%.6g, %.6g], endpoint shift under doubling %.4f\n", rep.min_ratio,
                     rep.max_ratio, shift);
    }
    emit(out, constant_report_to_json(rep, pass, make_meta(serialize_config(cfg), seed)));
    std::fprintf(stderr, "%s: max ratio %.6g, slope %.4f, %llu tuples%s -> %s\n", rep.case_id.c_str(), rep.max_ratio,
                 rep.slope, static_cast<unsigned long long>(rep.tuples), rep.subsampled ? " (sampled)" : "",
                 pass ? "PASS" : "FAIL");
    return pass ? kPass : kFailed;
}

int cmd_dispersion(const std::string& spec, double tau, double kappa, double alpha, long xi_max,
                   const std::string& out) {
    if (spec != "whitham" && spec != "fractional") fail(ErrorKind::Config, "unknown dispersion spec '" + spec + "'");
    DispersionSpec d =
        spec == "whitham" ? DispersionSpec::whitham_capillary(tau, kappa) : DispersionSpec::fractional(alpha);
    ConditionReport rep = check_conditions(d, xi_max);
    std::string echo = "spec = " + spec + "\ntau = " + std::to_string(tau) + "\nkappa = " + std::to_string(kappa) +
                       "\nalpha = " + std::to_string(alpha) + "\nxi_max = " + std::to_string(xi_max) + "\n";
    emit(out, condition_report_to_json(rep, make_meta(echo, 0)));
    std::fprintf(stderr, "%s: max endpoint shift %.4f -> %s\n", rep.spec_name.c_str(), rep.max_shift,
                 rep.pass ? "PASS" : "FAIL");
    return rep.pass ? kPass : kFailed;
}

int cmd_probe(const std::string& kind, const std::string& config_path, const std::string& out) {
    Config cfg = config_or_default(config_path);
    if (!kind.empty()) {
        cfg.scenario.kind = kind;
        validate_config(cfg);
    }
    ScenarioReport rep = run_scenario(to_scenario_config(cfg));
    emit(out, scenario_report_to_json(rep, make_meta(serialize_config(cfg), cfg.seed)));
    for (const auto& r : rep.ratios)
        std::fprintf(stderr, "  %-28s %.6g / %.6g = %.6g%s\n", r.label.c_str(), r.numerator, r.denominator, r.ratio,
                     r.degenerate ? " (degenerate)" : "");
    if (rep.blow_up) {
        std::fprintf(stderr, "%s: blow-up: %s\n", to_string(rep.kind), rep.note.c_str());
        return kBlowUp;
    }
    if (!rep.has_verdict) {
        std::fprintf(stderr, "%s: exploratory, no verdict\n", to_string(rep.kind));
        return kPass;
    }
    std::fprintf(stderr, "%s: %s\n", to_string(rep.kind), rep.pass ? "PASS" : "FAIL");
    return rep.pass ? kPass : kFailed;
}

int cmd_export(const std::string& format, const std::string& in, const std::string& out) {
    std::string text = read_file(in);
    RunRecord rec = run_from_json(text);
    OutputMeta meta = meta_from_json(text);
    emit(out, format == "csv" ? run_to_csv(rec, meta) : run_to_json(rec, meta));
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dgbo: periodic dispersion-generalized Benjamin-Ono toolkit"};
    app.set_version_flag("--version", std::string(DGBO_VERSION));
    app.require_subcommand(1);

    std::string config_path, out, format = "json", case_id, spec = "whitham", kind, in;
    int kmin = 6, kmax = 8, samples = 200;
    double tau = 1.0, kappa = 10.0, alpha_disp = 0.5, budget = 1e7;
    long xi_max = 512;
    std::uint64_t seed = 1;
    std::optional<double> alpha;

    auto* solve_cmd = app.add_subcommand("solve", "integrate one initial datum");
    solve_cmd->add_option("--config", config_path, "config file")->check(CLI::ExistingFile);
    solve_cmd->add_option("--out", out, "output path ('-' for stdout)")->required();
    solve_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify_cmd = app.add_subcommand("verify-estimates", "scan a symbol bound or convolution estimate");
    verify_cmd->add_option("--case", case_id, "case id, e.g. resonance, inv-resonance, sigma2, m3, conv-tri")
        ->required();
    verify_cmd->add_option("--kmin", kmin, "smallest scale in the trend fit of symbol scans")->check(CLI::Range(3, 14));
    verify_cmd->add_option("--kmax", kmax, "largest scale")->check(CLI::Range(1, 14));
    verify_cmd->add_option("--out", out, "output path");
    verify_cmd->add_option("--alpha", alpha, "dispersion exponent");
    verify_cmd->add_option("--budget", budget, "tuple budget for symbol scans");
    verify_cmd->add_option("--samples", samples, "random samples per convolution configuration");
    verify_cmd->add_option("--seed", seed, "seed");

    auto* disp_cmd = app.add_subcommand("check-dispersion", "check the admissibility conditions of a dispersion");
    disp_cmd->add_option("--spec", spec, "fractional or whitham")->check(CLI::IsMember({"fractional", "whitham"}));
    disp_cmd->add_option("--tau", tau, "surface tension");
    disp_cmd->add_option("--kappa", kappa, "frequency threshold");
    disp_cmd->add_option("--alpha", alpha_disp, "exponent for the fractional spec");
    disp_cmd->add_option("--xi-max", xi_max, "largest scanned frequency");
    disp_cmd->add_option("--out", out, "output path");

    auto* probe_cmd = app.add_subcommand("probe", "run a scenario");
    probe_cmd->add_option("--kind", kind, "apriori, difference_low, difference_hs, bona_smith, galilean, scaling, threshold");
    probe_cmd->add_option("--config", config_path, "config file")->check(CLI::ExistingFile);
    probe_cmd->add_option("--out", out, "output path");

    auto* export_cmd = app.add_subcommand("export", "convert a stored run");
    export_cmd->add_option("--format", format, "json or csv")->required()->check(CLI::IsMember({"json", "csv"}));
    export_cmd->add_option("--in", in, "run JSON")->required();
    export_cmd->add_option("--out", out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kConfig;
    }

    try {
        if (*solve_cmd) return cmd_solve(config_path, out, format);
        if (*verify_cmd) return cmd_verify(case_id, kmin, kmax, alpha, budget, samples, seed, out);
        if (*disp_cmd) return cmd_dispersion(spec, tau, kappa, alpha_disp, xi_max, out);
        if (*probe_cmd) return cmd_probe(kind, config_path, out);
        if (*export_cmd) return cmd_export(format, in, out);
    } catch (const BlowUpError& e) {
        std::fprintf(stderr, "error: %s (last finite time %.6g)\n", e.what(), e.last_time());
        return kBlowUp;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kOther;
    }
    return kOther;
}
