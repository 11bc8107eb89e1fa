import math

import numpy as np
import pytest

import stablestrain as ss


def test_jm1_small_strain_is_accurate():
    h = np.diag([1e-12, 0.0, 0.0])
    assert ss.jm1(h) == pytest.approx(1e-12, rel=1e-15)
    assert abs(ss.jm1(h, form="unstable") - 1e-12) / 1e-12 > 1e-6


def test_green_lagrange_matches_definition():
    rng = np.random.default_rng(3)
    h = 0.1 * rng.standard_normal((3, 3))
    expected = 0.5 * (h + h.T + h.T @ h)
    np.testing.assert_allclose(ss.green_lagrange(h), expected, rtol=1e-13, atol=1e-15)
    f = np.eye(3) + h
    np.testing.assert_allclose(ss.green_euler(h), 0.5 * (f @ f.T - np.eye(3)), rtol=1e-12, atol=1e-14)


def test_log1pmx_kernels():
    assert ss.log1pmx(1e-3) == pytest.approx(math.log1p(1e-3) - 1e-3, rel=1e-9)
    assert ss.log1pmx(0.0) == 0.0
    assert ss.expm1mx(1e-4) == pytest.approx(0.5e-8 + 1e-12 / 6, rel=1e-12)


def test_stress_push_forward():
    h = np.array([[0.01, 0.002, 0.0], [0.0, -0.005, 0.001], [0.003, 0.0, 0.02]])
    s = ss.neo_hookean_stress(h, 4.0, 1.0)
    tau = ss.neo_hookean_stress(h, 4.0, 1.0, configuration="current")
    f = np.eye(3) + h
    np.testing.assert_allclose(f @ s @ f.T, tau, rtol=1e-12, atol=1e-15)
    np.testing.assert_allclose(ss.mooney_rivlin_stress(h, 4.0, 1.0, 0.0), s, rtol=1e-13, atol=1e-16)
    assert not ss.neo_hookean_stress(np.zeros((3, 3)), 4.0, 1.0).any()


def test_inadmissible_state_raises():
    with pytest.raises(ss.InadmissibleState):
        ss.neo_hookean_stress(np.diag([-2.0, 0.0, 0.0]), 4.0, 1.0)
    with pytest.raises(ValueError):
        ss.jm1(np.zeros((2, 2)))


def test_sweep_table():
    assert "jm1" in ss.sweep_models()
    table = ss.sweep("jm1", samples=10)
    assert list(table) == ["eps", "rel_err_stable", "rel_err_unstable"]
    assert len(table["eps"]) == 10
    assert max(table["rel_err_stable"]) < 1e-14
    assert table["rel_err_unstable"][0] > 1e-10
    with pytest.raises(ValueError):
        ss.sweep("nope")


def test_axial_forms():
    stable = ss.axial()
    assert stable["converged"]
    assert len(stable["residual_norms"]) <= 3
    assert stable["force_x1"] == pytest.approx(-2.8e-12, rel=1e-3)
    assert abs(stable["force_imbalance"]) <= 1e-20
    unstable = ss.axial(form="unstable")
    assert abs(unstable["force_imbalance"]) >= 1e-18
