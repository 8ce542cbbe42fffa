#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dgbo/experiments.hpp"
#include "dgbo/littlewood_paley.hpp"

using namespace dgbo;

TEST_CASE("scenario names") {
    for (auto k : {ScenarioKind::Apriori, ScenarioKind::DifferenceLow, ScenarioKind::DifferenceHs,
                   ScenarioKind::BonaSmith, ScenarioKind::Galilean, ScenarioKind::Scaling,
                   ScenarioKind::ThresholdProbe})
        CHECK(parse_scenario(to_string(k)) == k);
    CHECK_THROWS_AS(parse_scenario("nope"), Error);
}

TEST_CASE("random data") {
    TorusGrid g(128);
    SpectralField a = random_smooth_datum(g, 1.1, 0.7, 3);
    CHECK(sobolev_norm(a, 1.1) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(a.at(0) == cplx(0.0));
    CHECK(a.hermitian_defect() == 0.0);
    for (long xi = g.dealias_cutoff() + 1; xi <= g.max_frequency(); ++xi) CHECK(a.at(xi) == cplx(0.0));
    SpectralField b = random_smooth_datum(g, 1.1, 0.7, 3);
    CHECK((a - b).max_abs() == 0.0);
    CHECK((a - random_smooth_datum(g, 1.1, 0.7, 4)).max_abs() > 0.0);
    CHECK_THROWS_AS(random_smooth_datum(g, 1.1, -1.0, 3), Error);
}

TEST_CASE("wave packets") {
    TorusGrid g(256);
    SpectralField p = wave_packet(g, 32, 0.5, 2.0);
    CHECK(sobolev_norm(p, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(p.at(32)) > std::abs(p.at(40)));
    CHECK_THROWS_AS(wave_packet(g, 200, 0.5, 1.0), Error);
}

TEST_CASE("validation") {
    ScenarioConfig c;
    c.n_data = 0;
    CHECK_THROWS_AS(validate(c), Error);
    c = ScenarioConfig{};
    c.kind = ScenarioKind::Apriori;
    c.r = 0.5;
    CHECK_THROWS_AS(validate(c), Error);
    c = ScenarioConfig{};
    c.kind = ScenarioKind::Scaling;
    c.lambda_grid = {3};
    CHECK_THROWS_AS(validate(c), Error);
    c = ScenarioConfig{};
    c.datum = SpectralField(TorusGrid(32));
    CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("Galilean residual") {
    TorusGrid g(64);
    SolverConfig cfg;
    cfg.grid = g;
    cfg.horizon = 0.2;
    SpectralField u0 = random_smooth_datum(g, 1.1, 0.5, 2);
    CHECK(galilean_residual(u0, 0.0, cfg) == 0.0);
    CHECK(galilean_residual(u0, 0.5, cfg) < 1e-9);
}

TEST_CASE("scaling scenario") {
    ScenarioConfig c;
    c.kind = ScenarioKind::Scaling;
    c.solver.grid = TorusGrid(64);
    c.solver.horizon = 0.1;
    c.lambda_grid = {2};
    c.norm_target = 0.5;
    auto rep = run_scenario(c);
    CHECK(rep.pass);
    REQUIRE(rep.ratios.size() == 1);
    CHECK(rep.ratios[0].ratio < 1e-10);
    CHECK_THROWS_AS(rep.stat("missing"), Error);
}

TEST_CASE("a-priori scenario on a few small data") {
    ScenarioConfig c;
    c.kind = ScenarioKind::Apriori;
    c.solver.grid = TorusGrid(64);
    c.solver.horizon = 0.2;
    c.n_data = 3;
    c.norm_target = 0.5;
    auto rep = run_scenario(c);
    CHECK(rep.ratios.size() == 3);
    CHECK(rep.pass);
    CHECK(rep.stat("max_ratio") < 2.0);
}

TEST_CASE("blow-up in a scenario is captured") {
    ScenarioConfig c;
    c.kind = ScenarioKind::Apriori;
    c.solver.grid = TorusGrid(64);
    c.solver.dt_policy = DtPolicy::Fixed;
    c.solver.dt = 0.5;
    c.solver.horizon = 50.0;
    c.n_data = 1;
    c.norm_target = 1e4;
    auto rep = run_scenario(c);
    CHECK(rep.blow_up);
    CHECK_FALSE(rep.pass);
}
