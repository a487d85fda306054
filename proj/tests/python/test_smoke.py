import json
import math

import pytest

import aeup


def test_worked_example_spectrum_and_recovery():
    p = aeup.GroupParams(4, 1)
    f = aeup.Signal(p, [1, 0, 0, 2], "analyst-plus")
    spec = aeup.dft(f)
    for got, want in zip(spec.values, [3, 1 - 2j, -1, 1 + 2j]):
        assert abs(got - want) < 1e-12
    prob = aeup.RecoveryProblem.from_signal(f, aeup.SupportSet.from_indices(p, [1, 2]))
    g, report = aeup.l1_recover(prob)
    assert report["status"] == "converged"
    assert abs(report["objective"] - 3) < 1e-6
    assert max(abs(a - b) for a, b in zip(g.values, f.values)) < 1e-6
    _, lsq = aeup.least_squares_recover(prob, aeup.support_of(f))
    assert lsq["status"] == "converged"


def test_energy_and_bounds():
    p = aeup.GroupParams(7, 1)
    a = aeup.make_interval_grid(p, 3)
    assert aeup.energy_quadruple(a) == aeup.energy_representation(a) == 19
    assert math.isclose(aeup.energy_fourier_check(a), 19, rel_tol=1e-10)
    assert aeup.classical_bound(1, 7, p)["satisfied"]
    h = aeup.make_cyclic_subgroup(aeup.GroupParams(12, 1), [3])
    pair = aeup.refined_bound(h, aeup.annihilator(h))
    assert abs(pair["E"]["correction"]) < 1e-12


def test_gowers_and_scan():
    p = aeup.GroupParams(6, 1)
    h = aeup.make_cyclic_subgroup(p, [2])
    r = aeup.gowers_norm(aeup.indicator(h, "unitary"), 3)
    assert abs(r["exponent_form"] - 0.5) < 1e-9
    scan = aeup.conjecture_scan(aeup.GroupParams(5, 1), 2, "random", 50, 1)
    assert scan["signals_examined"] == 50


def test_errors_are_typed():
    with pytest.raises(aeup.ParameterError):
        aeup.GroupParams(1, 1)
    with pytest.raises(aeup.Error):
        aeup.gowers_norm(aeup.Signal(aeup.GroupParams(5, 1), [1] * 5), 5)


def test_experiment_is_reproducible():
    a = aeup.run_experiment("soundness-sweep", seed=4, trials=20, include_wall_time=False)
    b = aeup.run_experiment("soundness-sweep", seed=4, trials=20, include_wall_time=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["summary"]["fail_count"] == 0
    rec = aeup.run_experiment("recovery-sweep", seed=1, trials=10, regime="classical", N=[7, 9], include_wall_time=False)
    assert len(rec["rows"]) == 10
