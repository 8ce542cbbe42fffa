#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgbo/solver.hpp"

using namespace dgbo;
using std::numbers::pi;

namespace {

SpectralField modes(const TorusGrid& g, std::initializer_list<std::pair<long, cplx>> m) {
    SpectralField f(g);
    for (auto [xi, c] : m) f.set_mode(xi, c);
    return f;
}

double max_diff(const SpectralField& a, const SpectralField& b) { return (a - b).max_abs(); }

} // namespace

TEST_CASE("nonlinearity of cos x") {
    TorusGrid g(32);
    SpectralField c = modes(g, {{1, pi}});
    SpectralField n = nonlinearity(c);
    // d/dx cos^2 x = -sin 2x
    CHECK(std::abs(n.at(2) - cplx(0.0, pi)) < 1e-13);
    CHECK(std::abs(n.at(0)) < 1e-13);
    CHECK(std::abs(n.at(1)) < 1e-13);
}

TEST_CASE("linear propagator") {
    TorusGrid g(64);
    auto d = DispersionSpec::fractional(0.5);
    SpectralField f = modes(g, {{3, cplx(1.0, 0.5)}, {7, 2.0}});
    SpectralField p = propagate_linear(f, d, 0.8);
    double ph = d(3.0) * 0.8;
    CHECK(std::abs(p.at(3) - cplx(1.0, 0.5) * std::polar(1.0, ph)) < 1e-14);
    CHECK(max_diff(propagate_linear(p, d, -0.8), f) < 1e-14);
    CHECK(p.hermitian_defect() < 1e-14);
}

TEST_CASE("linear-only runs reproduce the exact flow") {
    TorusGrid g(64);
    SolverConfig cfg;
    cfg.grid = g;
    cfg.linear_only = true;
    cfg.horizon = 1.0;
    cfg.dt = 0.05;
    cfg.dt_policy = DtPolicy::Fixed;
    SpectralField f = modes(g, {{5, 1.0}});
    for (Integrator in : {Integrator::ETDRK4, Integrator::IntegratingFactorRK4}) {
        cfg.integrator = in;
        SpectralField got = solve_final(f, cfg);
        CHECK(max_diff(got, propagate_linear(f, cfg.dispersion, 1.0)) < 1e-12);
    }
}

TEST_CASE("diagnostics") {
    TorusGrid g(64);
    SpectralField f = modes(g, {{1, pi}, {2, pi}});
    std::vector<double> s{0.0};
    DiagRecord d = diagnostics(f, 1.0, s);
    CHECK(d.hamiltonian == doctest::Approx(pi).epsilon(1e-13));
    CHECK(d.mass == doctest::Approx(2.0 * pi).epsilon(1e-13));
    CHECK(d.mean == 0.0);
    CHECK(d.hs_norms.size() == 1);
    f.coeffs()[0] = 2.0 * pi;  // add the constant 1
    CHECK(diagnostics(f, 1.0, s).mean == doctest::Approx(2.0 * pi));
    CHECK(diagnostics(f, DispersionSpec::fractional(1.0), s).hamiltonian ==
          doctest::Approx(diagnostics(f, 1.0, s).hamiltonian));
}

TEST_CASE("step size policy") {
    TorusGrid g(256);
    SolverConfig cfg;
    cfg.grid = g;
    cfg.horizon = 0.5;
    cfg.dt = 1e-3;
    SpectralField f = modes(g, {{1, 5.0 * pi}});  // max |u| = 5
    double dt = effective_dt(f, cfg);
    CHECK(dt <= 0.5 / (256 * 5.0) + 1e-15);
    CHECK(std::abs(0.5 / dt - std::round(0.5 / dt)) < 1e-9);
    cfg.dt_policy = DtPolicy::Fixed;
    cfg.dt = 0.3;
    CHECK(effective_dt(f, cfg) == doctest::Approx(0.25));
    cfg.dt = -1.0;
    CHECK_THROWS_AS(effective_dt(f, cfg), Error);
    cfg.dt = 1e-9;
    cfg.max_steps = 1000;
    CHECK_THROWS_AS(effective_dt(f, cfg), Error);
}

TEST_CASE("integrators agree and conserve on small data") {
    TorusGrid g(64);
    SolverConfig cfg;
    cfg.grid = g;
    cfg.horizon = 0.5;
    cfg.dt = 0.005;
    cfg.dt_policy = DtPolicy::Fixed;
    cfg.record_every = 10;
    SpectralField f = modes(g, {{1, 0.3 * pi}, {2, cplx(0.0, -0.1 * pi)}});
    f.coeffs()[0] = 0.2 * 2.0 * pi;
    RunRecord a = solve(f, cfg);
    cfg.integrator = Integrator::IntegratingFactorRK4;
    RunRecord b = solve(f, cfg);
    CHECK(a.times.size() == 11);
    CHECK(a.times.back() == 0.5);
    CHECK(a.steps == 100);
    const auto& d0 = a.diagnostics.front();
    const auto& d1 = a.diagnostics.back();
    CHECK(std::abs(d1.mass - d0.mass) < 1e-9);
    CHECK(std::abs(d1.hamiltonian - d0.hamiltonian) < 1e-9);
    CHECK(std::abs(d1.mean - d0.mean) < 1e-12);
    CHECK(std::abs(a.diagnostics.back().mass - b.diagnostics.back().mass) < 1e-8);
    cfg.keep_snapshots = true;
    RunRecord c = solve(f, cfg);
    CHECK(c.snapshots.size() == c.times.size());
    CHECK(c.snapshots.back().hermitian_defect() < 1e-13);
}

TEST_CASE("blow-up is reported") {
    TorusGrid g(64);
    SolverConfig cfg;
    cfg.grid = g;
    cfg.dt = 0.5;
    cfg.horizon = 50.0;
    cfg.dt_policy = DtPolicy::Fixed;
    SpectralField f = modes(g, {{1, 1e3 * pi}, {2, 7e2 * pi}});
    CHECK_THROWS_AS(solve(f, cfg), BlowUpError);
    try {
        solve(f, cfg);
    } catch (const BlowUpError& e) {
        CHECK(e.kind() == ErrorKind::BlowUp);
        CHECK(e.last_time() >= 0.0);
        CHECK(std::isfinite(e.last().mass));
    }
}

TEST_CASE("invalid data is rejected") {
    TorusGrid g(64);
    SolverConfig cfg;
    cfg.grid = g;
    SpectralField f(g);
    f.coeffs()[g.index(3)] = 1.0;  // no conjugate partner
    CHECK_THROWS_AS(solve(f, cfg), Error);
    CHECK_THROWS_AS(solve(SpectralField(TorusGrid(32)), cfg), Error);
    cfg.record_every = 0;
    CHECK_THROWS_AS(solve(SpectralField(g), cfg), Error);
}
