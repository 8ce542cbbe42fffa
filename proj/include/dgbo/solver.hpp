#pragma once

#include <optional>
#include <vector>

#include "dgbo/dispersion.hpp"
#include "dgbo/error.hpp"
#include "dgbo/spectral.hpp"

namespace dgbo {

enum class Integrator { ETDRK4, IntegratingFactorRK4 };
enum class DtPolicy { Cfl, Fixed };

struct SolverConfig {
    DispersionSpec dispersion = DispersionSpec::fractional(0.5);
    TorusGrid grid{256};
    double dt = 1e-3;
    DtPolicy dt_policy = DtPolicy::Cfl;
    double horizon = 0.5;
    Integrator integrator = Integrator::ETDRK4;
    int record_every = 1;
    std::vector<double> s_list{1.1};
    bool linear_only = false;      // test hook: drop the nonlinearity
    bool keep_snapshots = false;
    long max_steps = 50'000'000;
};

struct DiagRecord {
    double mean = 0.0;
    double mass = 0.0;
    double hamiltonian = 0.0;
    std::vector<double> hs_norms;  // aligned with the configured s_list
    bool operator==(const DiagRecord&) const = default;
};

struct RunRecord {
    std::vector<double> times;
    std::vector<DiagRecord> diagnostics;
    std::vector<SpectralField> snapshots;  // empty unless keep_snapshots
    std::vector<double> s_list;
    double dt_used = 0.0;
    long steps = 0;
};

// Raised when the state leaves the finite/bounded regime.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double last_time, DiagRecord last);
    double last_time() const { return last_time_; }
    const DiagRecord& last() const { return last_; }

private:
    double last_time_;
    DiagRecord last_;
};

// d/dx of the dealiased square.
SpectralField nonlinearity(const SpectralField& u);

// Exact linear flow e^{i omega t}.
SpectralField propagate_linear(const SpectralField& u, const DispersionSpec& spec, double t);

DiagRecord diagnostics(const SpectralField& u, const DispersionSpec& spec, std::span<const double> s_list);
DiagRecord diagnostics(const SpectralField& u, double alpha, std::span<const double> s_list);

// Fixed-step integrator with precomputed coefficients for one step size and mean value.
class Stepper {
public:
    Stepper(const SolverConfig& cfg, double dt, cplx mean_coeff);
    SpectralField advance(const SpectralField& u) const;
    double dt() const { return dt_; }

private:
    SpectralField rhs(const SpectralField& u) const;
    SpectralField mul(const std::vector<cplx>& m, const SpectralField& u) const;

    TorusGrid grid_;
    Integrator integrator_;
    bool linear_only_;
    double dt_;
    std::vector<cplx> e_, e2_, q_, f1_, f2_, f3_;
};

SpectralField step(const SpectralField& state, double dt, const SolverConfig& cfg);

// Step size actually used over [0, horizon] for this datum.
double effective_dt(const SpectralField& u0, const SolverConfig& cfg);

RunRecord solve(const SpectralField& u0, const SolverConfig& cfg);

// Field at the horizon only (no diagnostics beyond the blow-up check).
SpectralField solve_final(const SpectralField& u0, const SolverConfig& cfg);

} // namespace dgbo
