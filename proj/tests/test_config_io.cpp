#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "dgbo/config.hpp"
#include "dgbo/report_io.hpp"

using namespace dgbo;
using std::numbers::pi;

namespace {

std::string message_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("defaults and round trip") {
    Config c = parse_config("");
    CHECK(c == Config{});
    c.seed = 42;
    c.solver.alpha = 0.1 + 0.2 + 0.3;
    c.solver.s_list = {1.0, 1.25};
    c.data.kind = "modes";
    c.data.cos_modes = {{1, 0.5}, {3, 1.0 / 3.0}};
    c.scenario.n_grid = {3, 4};
    Config back = parse_config(serialize_config(c));
    CHECK(back == c);
    CHECK(serialize_config(back) == serialize_config(c));
}

TEST_CASE("comments, quotes and whitespace") {
    Config c = parse_config("# header\nsolver.alpha = 0.75   # trailing\n\n  scenario.kind = \"galilean\"\nseed=9\n");
    CHECK(c.solver.alpha == 0.75);
    CHECK(c.scenario.kind == "galilean");
    CHECK(c.seed == 9);
}

TEST_CASE("errors carry line and column") {
    CHECK(message_of("seed = 1\nsolver.bogus = 3\n").find("line 2, column 1: unknown key") != std::string::npos);
    CHECK(message_of("seed = 1\nseed = 2\n").find("line 2") != std::string::npos);
    CHECK(message_of("seed = 1\nseed = 2\n").find("duplicate") != std::string::npos);
    CHECK(message_of("solver.n_points = 12x\n").find("line 1, column 19") != std::string::npos);
    CHECK(message_of("solver.alpha\n").find("expected 'key = value'") != std::string::npos);
    CHECK(message_of("solver.alpha = 1.5\n").find("alpha must lie in (0,1)") != std::string::npos);
    CHECK(message_of("solver.alpha = 0.2\nscenario.s = 1.2\nscenario.r = 1.2\n").find("3/2 - alpha") !=
          std::string::npos);
    CHECK(message_of("scenario.r = 1.0\n").find("r >= s") != std::string::npos);
    CHECK(message_of("scenario.kind = nope\n").find("unknown scenario") != std::string::npos);
    CHECK(message_of("data.cos = 1:0.5, 2\n").find("k:amplitude") != std::string::npos);
}

TEST_CASE("derived objects") {
    Config c = parse_config(
        "solver.n_points = 64\ndata.kind = modes\ndata.cos = 1:1, 0:0.5\ndata.sin = 2:2\n"
        "solver.dt_policy = fixed\nsolver.integrator = ifrk4\n");
    SpectralField u = initial_datum(c);
    CHECK(std::abs(u.at(1) - pi) < 1e-14);
    CHECK(std::abs(u.at(0) - pi) < 1e-14);
    CHECK(std::abs(u.at(2) - cplx(0.0, -2.0 * pi)) < 1e-14);
    SolverConfig sc = to_solver_config(c);
    CHECK(sc.grid.n_points() == 64);
    CHECK(sc.dt_policy == DtPolicy::Fixed);
    CHECK(sc.integrator == Integrator::IntegratingFactorRK4);
    ScenarioConfig scen = to_scenario_config(c);
    CHECK(scen.datum.has_value());

    Config w = parse_config("solver.dispersion = whitham\nsolver.whitham_tau = 2\n");
    CHECK(make_dispersion(w.solver).name() == "whitham-capillary");
    CHECK_THROWS_AS(load_config("/nonexistent/dir/x.cfg"), Error);
}

TEST_CASE("run records in JSON and CSV") {
    RunRecord r;
    r.times = {0.0, 0.1};
    r.s_list = {1.1, 2.0};
    r.diagnostics = {DiagRecord{0.0, 1.0 / 3.0, 2.0, {0.5, 0.25}}, DiagRecord{1e-17, 0.1, 2.5, {0.75, 1.0}}};
    r.dt_used = 1e-3;
    r.steps = 100;
    OutputMeta meta = make_meta("seed = 4\n", 4);
    CHECK(meta.version == DGBO_VERSION);
    CHECK(!meta.bump_profile.empty());
    std::string js = run_to_json(r, meta);
    RunRecord back = run_from_json(js);
    CHECK(back.times == r.times);
    CHECK(back.diagnostics == r.diagnostics);
    CHECK(back.s_list == r.s_list);
    CHECK(back.steps == 100);
    OutputMeta m2 = meta_from_json(js);
    CHECK(m2.seed == 4);
    CHECK(m2.config_echo == meta.config_echo);
    CHECK_THROWS_AS(run_from_json("{not json"), Error);

    std::string csv = run_to_csv(r, meta);
    CHECK(csv.find("# version: ") != std::string::npos);
    CHECK(csv.find("# seed: 4") != std::string::npos);
    CHECK(csv.find("t,mean,mass,hamiltonian,hs_norm[s=1.1],hs_norm[s=2]") != std::string::npos);
    CHECK(csv.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("CSV shape") {
    OutputMeta meta = make_meta("", 1);
    RunRecord empty;
    empty.s_list = {1.1};
    std::string head = run_to_csv(empty, meta);
    CHECK(head.substr(head.rfind("t,mean")) == "t,mean,mass,hamiltonian,hs_norm[s=1.1]\n");

    RunRecord r;
    r.s_list = {};
    for (int i = 0; i < 5; ++i) {
        r.times.push_back(0.1 * i);
        r.diagnostics.push_back(DiagRecord{0.0, 1.0, 2.0, {}});
    }
    std::string csv = run_to_csv(r, meta);
    int rows = 0;
    std::size_t pos = 0;
    while ((pos = csv.find('\n', pos)) != std::string::npos) {
        ++pos;
        if (pos < csv.size() && csv[pos] != '#' && csv[pos] != 't') ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("file helpers") {
    auto p = std::filesystem::temp_directory_path() / "dgbo_io_test.txt";
    write_file(p.string(), "hello\n");
    CHECK(read_file(p.string()) == "hello\n");
    std::filesystem::remove(p);
    CHECK_THROWS_AS(read_file(p.string()), Error);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/out.txt", "x"), Error);
}
