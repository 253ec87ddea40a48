"""Backend parity: compiled and pure-Python kernels must agree."""

import numpy as np
import pytest

import oracles
from localfrac._backend import BACKEND, available_kernels


def test_backend_selected():
    assert BACKEND in available_kernels()


def test_gamma_kernels(kern, rng):
    for x in rng.uniform(0.5, 171.0, 300):
        assert kern.gamma_lanczos(x) == pytest.approx(oracles.gamma(x), rel=2e-15)
        assert kern.lgamma_lanczos(x) == pytest.approx(float(oracles.mpmath.loggamma(x)), rel=2e-15, abs=1e-15)
    assert kern.gamma_lanczos(7.0) == 720.0


def test_coefficient_maps(kern, rng):
    c = rng.uniform(-1, 1, 40)
    a = 0.37
    d = kern.derivative_coeffs(c, a)
    i = kern.integral_coeffs(c, a)
    for k in range(1, 40):
        assert d[k - 1] == pytest.approx(c[k] * oracles.gamma_ratio(1 + k * a, 1 + (k - 1) * a), rel=1e-13)
    for k in range(40):
        assert i[k + 1] == pytest.approx(c[k] * oracles.gamma_ratio(1 + k * a, 1 + (k + 1) * a), rel=1e-13)
    assert i[0] == 0.0
    np.testing.assert_allclose(kern.derivative_coeffs(i, a), c, rtol=1e-15)


def test_eval_kernels(kern, rng):
    c = rng.uniform(-1, 1, 20)
    h = np.concatenate(([0.0], rng.uniform(0, 3, 50)))
    vals = kern.eval_offsets(c, 0.6, h)
    assert vals[0] == c[0]
    for hv, v in zip(h, vals):
        assert kern.eval_offset(c, 0.6, hv) == pytest.approx(v, rel=1e-15, abs=1e-15)
        assert v == pytest.approx(oracles.power_series_value(c, 0.6, hv), rel=1e-12, abs=1e-13)


def test_ml_kernel(kern):
    value, used, tail, ok = kern.ml_series(0.5, 1.0, 1e-12, 10_000)
    assert ok and used > 1
    assert abs(value - oracles.ml_half(1.0)) <= tail + 1e-15
    assert kern.ml_series(0.3, 0.0, 1e-12, 10) == (1.0, 1, 0.0, True)
    assert not kern.ml_series(0.05, 50.0, 1e-14, 100)[3]


def test_backends_agree(rng):
    kernels = available_kernels()
    if len(kernels) < 2:
        pytest.skip("compiled kernels not built")
    py, cy = kernels["python"], kernels["cython"]
    c = rng.uniform(-1, 1, 60)
    h = rng.uniform(0, 2, 200)
    np.testing.assert_allclose(py.eval_offsets(c, 0.45, h), cy.eval_offsets(c, 0.45, h), rtol=1e-13, atol=1e-14)
    np.testing.assert_allclose(py.derivative_coeffs(c, 0.45), cy.derivative_coeffs(c, 0.45), rtol=1e-14)
    np.testing.assert_allclose(py.integral_coeffs(c, 0.45), cy.integral_coeffs(c, 0.45), rtol=1e-14)
    for x in rng.uniform(0.5, 170, 100):
        assert py.gamma_lanczos(x) == pytest.approx(cy.gamma_lanczos(x), rel=1e-15)
    for a, x in [(0.3, 2.0), (0.9, 7.0), (1.0, 1.0)]:
        pv, pn, pt, _ = py.ml_series(a, x, 1e-13, 10_000)
        cv, cn, ct, _ = cy.ml_series(a, x, 1e-13, 10_000)
        assert pn == cn
        assert pv == pytest.approx(cv, rel=1e-14)
