import math

import numpy as np
import pytest

import pluri


def test_one_variable_closed_form():
    assert pluri.v_kq(np.array([2j])) == pytest.approx(math.log(3.0), abs=1e-14)
    for z in [0.3 + 0.7j, -1.2 - 2.0j, 1 + 1j]:
        assert pluri.v_kq(np.array([z])) == pytest.approx(pluri.one_var_exact(z), abs=1e-12)


def test_real_points_carry_the_weight():
    x = np.array([0.4, -1.3, 2.0])
    assert pluri.v_kq(x.astype(complex)) == pytest.approx(0.5 * math.log1p(x @ x), abs=1e-14)


def test_lift_lands_on_the_sphere():
    z = np.array([0.4j, 0.2])
    w = pluri.lift(z)
    assert len(w) == 3
    assert abs((w * w).sum() - 1) < 1e-12
    assert pluri.fullin_residual(z) < 1e-10


def test_metric_and_density():
    g, eig, det = pluri.metric_tensor(np.array([1.0, 0.0, 0.0]))
    assert np.allclose(eig, [0.25, 0.5, 0.5], atol=1e-14)
    assert det == pytest.approx(1 / 16, rel=1e-12)
    assert pluri.ma_density(np.array([1.0, 1.0])) == pytest.approx(2 / (3 * math.sqrt(3)), rel=1e-12)
    assert pluri.total_mass(2) == pytest.approx(4 * math.pi, rel=1e-10)


def test_baran_numeric_matches_closed():
    x, y = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    value, converged = pluri.baran_delta_numeric(x, y)
    assert converged
    assert value == pytest.approx(math.sqrt(2) / 2, rel=1e-6)
    assert pluri.baran_delta(x, y) == pytest.approx(math.sqrt(2) / 2, rel=1e-14)


def test_capacity():
    sup, cap = pluri.alexander_sup(3)
    assert sup == pytest.approx(0.5 * math.log(2), abs=1e-8)
    assert cap == pytest.approx(1 / math.sqrt(2), abs=1e-8)


def test_certificate_on_imaginary_axis():
    y = np.array([0.3, -1.1])
    lb, a = pluri.linear_lower_bound(1j * y)
    assert lb == pytest.approx(math.log1p(np.linalg.norm(y)), abs=1e-10)
    assert np.linalg.norm(a) == pytest.approx(1.0)


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        pluri.lie_u(np.zeros(2, dtype=complex))
    with pytest.raises(ValueError):
        pluri.lift(np.array([0.95j]))


def test_suite_roundtrip():
    assert "capacity" in pluri.suite_names()
    rep = pluri.run_suite("onevar")
    assert rep["pass"] and rep["checks"][0]["residual"] < 1e-12
    with pytest.raises(ValueError):
        pluri.run_suite("nope")
