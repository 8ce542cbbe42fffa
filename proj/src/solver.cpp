#include "dgbo/solver.hpp"

#include <algorithm>
#include <cmath>

#include "dgbo/littlewood_paley.hpp"

namespace dgbo {

BlowUpError::BlowUpError(const std::string& what, double last_time, DiagRecord last)
    : Error(ErrorKind::BlowUp, what), last_time_(last_time), last_(std::move(last)) {}

namespace {

constexpr double kBlowUpLevel = 1e8;
constexpr int kContourPoints = 32;

SpectralField derivative_of_square(const SpectralField& u) {
    SpectralField sq = square_dealiased(u);
    auto c = sq.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= cplx(0.0, static_cast<double>(u.grid().frequency(i)));
    return sq;
}

// omega forced odd so that conjugate modes evolve as exact mirrors
double odd_omega(const DispersionSpec& spec, long xi) {
    if (xi == 0) return 0.0;
    double w = spec(static_cast<double>(std::abs(xi)));
    return xi > 0 ? w : -w;
}

} // namespace

SpectralField nonlinearity(const SpectralField& u) { return derivative_of_square(u); }

SpectralField propagate_linear(const SpectralField& u, const DispersionSpec& spec, double t) {
    return apply_multiplier(u, [&](long xi) {
        double ph = odd_omega(spec, xi) * t;
        return cplx(std::cos(ph), std::sin(ph));
    });
}

DiagRecord diagnostics(const SpectralField& u, const DispersionSpec& spec, std::span<const double> s_list) {
    DiagRecord d;
    d.mean = u.at(0).real();
    d.mass = l2_norm_squared(u);
    double quad = 0.0;
    const auto c = u.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        long xi = u.grid().frequency(i);
        if (xi == 0) continue;
        quad += spec.energy_weight(static_cast<double>(std::abs(xi))) * std::norm(c[i]);
    }
    d.hamiltonian = quad / (2.0 * kTwoPi) - integral_power(u, 3) / 3.0;
    for (double s : s_list) d.hs_norms.push_back(sobolev_norm(u, s));
    return d;
}

DiagRecord diagnostics(const SpectralField& u, double alpha, std::span<const double> s_list) {
    return diagnostics(u, DispersionSpec::fractional(alpha), s_list);
}

Stepper::Stepper(const SolverConfig& cfg, double dt, cplx mean_coeff)
    : grid_(cfg.grid), integrator_(cfg.integrator), linear_only_(cfg.linear_only), dt_(dt) {
    require(dt >= 0.0 && std::isfinite(dt), ErrorKind::Config, "time step must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(grid_.n_points());
    for (auto* v : {&e_, &e2_, &q_, &f1_, &f2_, &f3_}) v->assign(n, 0.0);
    // the constant part m of u enters linearly: d/dx(u^2) = 2m u_x + d/dx(v^2)
    const double m = mean_coeff.real() / kTwoPi;
    std::vector<cplx> circle(kContourPoints);
    for (int j = 0; j < kContourPoints; ++j) {
        double th = kTwoPi * (j + 0.5) / kContourPoints;
        circle[j] = cplx(std::cos(th), std::sin(th));
    }
    for (long xi = 0; xi <= grid_.max_frequency(); ++xi) {
        double lin = odd_omega(cfg.dispersion, xi) + 2.0 * m * static_cast<double>(xi);
        cplx z(0.0, lin * dt);
        cplx e = std::exp(z), e2 = std::exp(0.5 * z);
        cplx q = 0.0, a = 0.0, b = 0.0, c = 0.0;
        for (const cplx& w : circle) {
            cplx r = z + w;
            cplx er = std::exp(r), r3 = r * r * r;
            q += (std::exp(0.5 * r) - 1.0) / r;
            a += (-4.0 - r + er * (4.0 - 3.0 * r + r * r)) / r3;
            b += (2.0 + r + er * (r - 2.0)) / r3;
            c += (-4.0 - 3.0 * r - r * r + er * (4.0 - r)) / r3;
        }
        const double w = dt / kContourPoints;
        // contour means of purely imaginary z are conjugate-symmetric; keep the mirror exact
        std::size_t ip = grid_.index(xi);
        std::size_t im = grid_.index(-xi);
        auto put = [&](std::vector<cplx>& v, cplx val) {
            if (xi == 0) val = val.real();
            v[ip] = val;
            v[im] = std::conj(val);
        };
        put(e_, e);
        put(e2_, e2);
        put(q_, q * w);
        put(f1_, a * w);
        put(f2_, b * w);
        put(f3_, c * w);
    }
}

SpectralField Stepper::rhs(const SpectralField& u) const {
    if (linear_only_) return SpectralField(grid_);
    SpectralField v = u;
    v.coeffs()[0] = 0.0;
    return derivative_of_square(v);
}

SpectralField Stepper::mul(const std::vector<cplx>& m, const SpectralField& u) const {
    SpectralField out = u;
    auto c = out.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
    return out;
}

SpectralField Stepper::advance(const SpectralField& u) const {
    require(u.grid() == grid_, ErrorKind::Config, "state grid does not match the stepper grid");
    if (dt_ == 0.0) return u;
    const std::size_t n = static_cast<std::size_t>(grid_.n_points());
    auto U = u.coeffs();
    if (integrator_ == Integrator::ETDRK4) {
        SpectralField nv = rhs(u);
        SpectralField a(grid_), b(grid_), c(grid_);
        auto NV = nv.coeffs();
        for (std::size_t i = 0; i < n; ++i) a.coeffs()[i] = e2_[i] * U[i] + q_[i] * NV[i];
        SpectralField na = rhs(a);
        for (std::size_t i = 0; i < n; ++i) b.coeffs()[i] = e2_[i] * U[i] + q_[i] * na.coeffs()[i];
        SpectralField nb = rhs(b);
        for (std::size_t i = 0; i < n; ++i)
            c.coeffs()[i] = e2_[i] * a.coeffs()[i] + q_[i] * (2.0 * nb.coeffs()[i] - NV[i]);
        SpectralField nc = rhs(c);
        SpectralField out(grid_);
        for (std::size_t i = 0; i < n; ++i)
            out.coeffs()[i] = e_[i] * U[i] + f1_[i] * NV[i] + 2.0 * f2_[i] * (na.coeffs()[i] + nb.coeffs()[i]) +
                              f3_[i] * nc.coeffs()[i];
        return out;
    }
    // integrating-factor RK4
    const double h = dt_;
    SpectralField k1 = rhs(u);
    SpectralField a(grid_), b(grid_), c(grid_), out(grid_);
    for (std::size_t i = 0; i < n; ++i) a.coeffs()[i] = e2_[i] * (U[i] + 0.5 * h * k1.coeffs()[i]);
    SpectralField k2 = rhs(a);
    for (std::size_t i = 0; i < n; ++i) b.coeffs()[i] = e2_[i] * U[i] + 0.5 * h * k2.coeffs()[i];
    SpectralField k3 = rhs(b);
    for (std::size_t i = 0; i < n; ++i) c.coeffs()[i] = e_[i] * U[i] + h * e2_[i] * k3.coeffs()[i];
    SpectralField k4 = rhs(c);
    for (std::size_t i = 0; i < n; ++i)
        out.coeffs()[i] = e_[i] * U[i] + h / 6.0 *
                                             (e_[i] * k1.coeffs()[i] +
                                              2.0 * e2_[i] * (k2.coeffs()[i] + k3.coeffs()[i]) + k4.coeffs()[i]);
    return out;
}

SpectralField step(const SpectralField& state, double dt, const SolverConfig& cfg) {
    require(dt >= 0.0, ErrorKind::Config, "time step must be nonnegative");
    if (dt == 0.0) return state;
    SpectralField out = Stepper(cfg, dt, state.at(0)).advance(state);
    if (!out.all_finite()) {
        DiagRecord last = state.all_finite() ? diagnostics(state, cfg.dispersion, cfg.s_list) : DiagRecord{};
        throw BlowUpError("state became non-finite", 0.0, last);
    }
    return out;
}

namespace {

struct Schedule {
    double dt;
    long steps;
};

Schedule schedule_for(const SpectralField& u0, const SolverConfig& cfg) {
    require(cfg.horizon > 0.0 && std::isfinite(cfg.horizon), ErrorKind::Config, "horizon must be positive");
    require(cfg.dt > 0.0 && std::isfinite(cfg.dt), ErrorKind::Config, "time step must be positive");
    require(cfg.record_every >= 1, ErrorKind::Config, "record_every must be at least 1");
    double dt = cfg.dt;
    if (cfg.dt_policy == DtPolicy::Cfl) {
        double amp = 0.0;
        for (double v : from_spectral(u0)) amp = std::max(amp, std::abs(v));
        if (amp > 0.0) dt = std::min(dt, 0.5 / (cfg.grid.n_points() * amp));
    }
    double raw = std::ceil(cfg.horizon / dt - 1e-9);
    require(raw <= static_cast<double>(cfg.max_steps), ErrorKind::Resource,
            "horizon needs more than " + std::to_string(cfg.max_steps) + " steps under the dt policy");
    long steps = std::max(1L, static_cast<long>(raw));
    return {cfg.horizon / static_cast<double>(steps), steps};
}

SpectralField prepare(const SpectralField& u0, const SolverConfig& cfg) {
    require(u0.grid() == cfg.grid, ErrorKind::Config, "initial datum grid does not match the solver grid");
    require(u0.all_finite(), ErrorKind::Numeric, "initial datum is not finite");
    require(u0.hermitian_defect() <= 1e-12 * (1.0 + u0.max_abs()), ErrorKind::Domain,
            "initial datum is not real-valued");
    return truncate(u0, cfg.grid.dealias_cutoff());
}

bool blown_up(const SpectralField& u) { return !u.all_finite() || u.max_abs() > kBlowUpLevel; }

} // namespace

double effective_dt(const SpectralField& u0, const SolverConfig& cfg) {
    return schedule_for(prepare(u0, cfg), cfg).dt;
}

RunRecord solve(const SpectralField& u0, const SolverConfig& cfg) {
    SpectralField u = prepare(u0, cfg);
    Schedule sch = schedule_for(u, cfg);
    Stepper stepper(cfg, sch.dt, u.at(0));
    RunRecord rec;
    rec.s_list = cfg.s_list;
    rec.dt_used = sch.dt;
    rec.steps = sch.steps;
    auto record = [&](double t) {
        rec.times.push_back(t);
        rec.diagnostics.push_back(diagnostics(u, cfg.dispersion, cfg.s_list));
        if (cfg.keep_snapshots) rec.snapshots.push_back(u);
    };
    record(0.0);
    double last_t = 0.0;
    for (long n = 1; n <= sch.steps; ++n) {
        SpectralField next = stepper.advance(u);
        if (blown_up(next)) {
            DiagRecord last = diagnostics(u, cfg.dispersion, cfg.s_list);
            throw BlowUpError("solution blew up near t = " + std::to_string(n * sch.dt), last_t, last);
        }
        u = std::move(next);
        last_t = n == sch.steps ? cfg.horizon : static_cast<double>(n) * sch.dt;
        if (n % cfg.record_every == 0 || n == sch.steps) record(last_t);
    }
    return rec;
}

SpectralField solve_final(const SpectralField& u0, const SolverConfig& cfg) {
    SpectralField u = prepare(u0, cfg);
    Schedule sch = schedule_for(u, cfg);
    Stepper stepper(cfg, sch.dt, u.at(0));
    for (long n = 1; n <= sch.steps; ++n) {
        SpectralField next = stepper.advance(u);
        if (blown_up(next)) {
            DiagRecord last = diagnostics(u, cfg.dispersion, cfg.s_list);
            throw BlowUpError("solution blew up near t = " + std::to_string(n * sch.dt),
                              static_cast<double>(n - 1) * sch.dt, last);
        }
        u = std::move(next);
    }
    return u;
}

} // namespace dgbo
