#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgbo/config.hpp"
#include "dgbo/dispersion.hpp"
#include "dgbo/littlewood_paley.hpp"
#include "dgbo/report_io.hpp"
#include "dgbo/resonance.hpp"
#include "dgbo/solver.hpp"

namespace py = pybind11;
using namespace dgbo;

namespace {

SpectralField field_from_samples(py::array_t<double, py::array::c_style | py::array::forcecast> u) {
    require(u.ndim() == 1, ErrorKind::Config, "samples must be one-dimensional");
    TorusGrid g(static_cast<int>(u.shape(0)));
    return to_spectral(g, std::span<const double>(u.data(), static_cast<std::size_t>(u.shape(0))));
}

py::dict run_dict(const RunRecord& r) {
    py::dict d;
    d["t"] = r.times;
    std::vector<double> mean, mass, ham;
    std::vector<std::vector<double>> hs;
    for (const auto& x : r.diagnostics) {
        mean.push_back(x.mean);
        mass.push_back(x.mass);
        ham.push_back(x.hamiltonian);
        hs.push_back(x.hs_norms);
    }
    d["mean"] = mean;
    d["mass"] = mass;
    d["hamiltonian"] = ham;
    d["hs_norms"] = hs;
    d["s_list"] = r.s_list;
    d["dt"] = r.dt_used;
    d["steps"] = r.steps;
    if (!r.snapshots.empty()) {
        std::vector<std::vector<double>> u;
        for (const auto& f : r.snapshots) u.push_back(from_spectral(f));
        d["u"] = u;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_dgbo, m) {
    m.doc() = "Dispersive generalized Benjamin-Ono toolkit";
    m.attr("__version__") = DGBO_VERSION;

    py::register_exception<Error>(m, "DgboError", PyExc_RuntimeError);

    py::class_<DispersionSpec>(m, "Dispersion")
        .def_static("fractional", &DispersionSpec::fractional, py::arg("alpha"))
        .def_static("whitham_capillary", &DispersionSpec::whitham_capillary, py::arg("tau"), py::arg("kappa") = 10.0)
        .def("__call__", &DispersionSpec::operator())
        .def_property_readonly("alpha", &DispersionSpec::alpha)
        .def_property_readonly("kappa", &DispersionSpec::kappa)
        .def_property_readonly("name", &DispersionSpec::name);

    m.def("chi", &chi, py::arg("xi"));
    m.def("chi_k", &chi_k, py::arg("k"), py::arg("xi"));

    m.def(
        "check_conditions",
        [](const DispersionSpec& d, long xi_max) {
            ConditionReport r = check_conditions(d, xi_max);
            py::dict out;
            auto w = [](const RatioWindow& x) { return py::make_tuple(x.lo, x.hi); };
            out["growth"] = w(r.growth);
            out["first"] = w(r.first);
            out["second"] = w(r.second);
            out["resonance"] = w(r.resonance);
            out["max_shift"] = r.max_shift;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("dispersion"), py::arg("xi_max"));

    m.def(
        "worst_constant",
        [](const std::string& case_id, double alpha, int k_min, int k_max, double budget, std::uint64_t seed) {
            BoundCase c = parse_case(case_id);
            c.alpha = alpha;
            c.k_min = k_min;
            c.k_max = k_max;
            c.budget = static_cast<std::uint64_t>(budget);
            c.seed = seed;
            ConstantReport r = worst_constant(c);
            py::dict out;
            out["max_ratio"] = r.max_ratio;
            out["min_ratio"] = r.min_ratio;
            out["slope"] = r.slope;
            out["argmax"] = r.argmax;
            out["tuples"] = r.tuples;
            out["subsampled"] = r.subsampled;
            return out;
        },
        py::arg("case"), py::arg("alpha") = 0.5, py::arg("k_min") = 6, py::arg("k_max") = 8,
        py::arg("budget") = 1e7, py::arg("seed") = 1);

    m.def(
        "solve",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> u0, const DispersionSpec& d, double horizon,
           double dt, bool fixed_dt, std::vector<double> s_list, int record_every, bool snapshots) {
            SpectralField f = field_from_samples(u0);
            SolverConfig cfg;
            cfg.dispersion = d;
            cfg.grid = f.grid();
            cfg.horizon = horizon;
            cfg.dt = dt;
            cfg.dt_policy = fixed_dt ? DtPolicy::Fixed : DtPolicy::Cfl;
            cfg.s_list = std::move(s_list);
            cfg.record_every = record_every;
            cfg.keep_snapshots = snapshots;
            RunRecord r;
            {
                py::gil_scoped_release release;
                r = solve(f, cfg);
            }
            return run_dict(r);
        },
        py::arg("u0"), py::arg("dispersion"), py::arg("horizon") = 0.5, py::arg("dt") = 1e-3,
        py::arg("fixed_dt") = false, py::arg("s_list") = std::vector<double>{1.1}, py::arg("record_every") = 1,
        py::arg("snapshots") = false);

    m.def(
        "diagnostics",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> u, const DispersionSpec& d,
           std::vector<double> s_list) {
            DiagRecord r = diagnostics(field_from_samples(u), d, s_list);
            py::dict out;
            out["mean"] = r.mean;
            out["mass"] = r.mass;
            out["hamiltonian"] = r.hamiltonian;
            out["hs_norms"] = r.hs_norms;
            return out;
        },
        py::arg("u"), py::arg("dispersion"), py::arg("s_list") = std::vector<double>{});

    m.def(
        "parse_config", [](const std::string& text) { return serialize_config(parse_config(text)); }, py::arg("text"),
        "Validate a config and return it with every key filled in.");
}
