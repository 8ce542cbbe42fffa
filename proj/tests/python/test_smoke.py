import math

import numpy as np
import pytest

import dgbo


def test_cutoff_value():
    assert dgbo.chi(1.0) == 1.0
    assert abs(dgbo.chi(1.5) - 0.1090968211956129383) < 1e-15


def test_linear_solution_conserves_diagnostics():
    x = 2 * np.pi * np.arange(64) / 64
    u0 = 0.3 * np.cos(x)
    d = dgbo.Dispersion.fractional(0.5)
    run = dgbo.solve(u0, d, horizon=0.2, dt=0.01, fixed_dt=True, record_every=5, snapshots=True)
    assert run["t"][-1] == pytest.approx(0.2)
    assert abs(run["mass"][-1] - run["mass"][0]) < 1e-10
    assert len(run["u"]) == len(run["t"])


def test_diagnostics_oracle():
    x = 2 * np.pi * np.arange(64) / 64
    diag = dgbo.diagnostics(np.cos(x) + np.cos(2 * x), dgbo.Dispersion.fractional(1.0))
    assert diag["hamiltonian"] == pytest.approx(math.pi, rel=1e-12)


def test_whitham_conditions():
    rep = dgbo.check_conditions(dgbo.Dispersion.whitham_capillary(1.0, 10.0), 512)
    assert rep["pass"]
    assert rep["growth"][0] > 0


def test_resonance_window():
    rep = dgbo.worst_constant("resonance", alpha=0.5, k_max=8)
    assert rep["max_ratio"] == pytest.approx(1.4360342011759712, rel=1e-12)


def test_errors_surface_as_exceptions():
    with pytest.raises(dgbo.DgboError):
        dgbo.parse_config("solver.alpha = 1.5\n")
    with pytest.raises(dgbo.DgboError):
        dgbo.Dispersion.fractional(-1.0)
