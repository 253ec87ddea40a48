import math

import numpy as np
import pytest

import oracles
from localfrac import (
    DegenerateError,
    DomainError,
    EvaluationError,
    FractalSeries,
    definite_integral,
    evaluate,
    holder_exponent,
    lf_derivative,
    lfd_quotient,
    lfi_quadrature,
    riemann_sum_diagnostic,
)

# -- lfd_quotient ---------------------------------------------------------------


def test_quotient_exact_on_basis_function():
    q = lfd_quotient(lambda t: np.sqrt(t), 0.0, 0.5, 1e-2, 12)
    np.testing.assert_allclose(q.quotients, oracles.gamma(1.5), rtol=1e-15)
    assert q.stability <= 1e-15
    assert len(q.h_values) == 12
    assert all(b < a for a, b in zip(q.h_values, q.h_values[1:]))


def test_quotient_classical():
    q = lfd_quotient(lambda t: t * t, 1.0, 1.0, 1e-2, 20)
    assert q.value == pytest.approx(2.0, abs=1e-7)
    errs = [abs(v - 2.0) for v in q.quotients[:10]]
    assert all(b < a for a, b in zip(errs, errs[1:]))


def test_quotient_constant():
    q = lfd_quotient(lambda t: 3.0 + 0.0 * t, 0.5, 0.3, 0.1, 5)
    assert q.value == 0.0
    assert q.stability == 0.0


def test_quotient_scalar_only_callable():
    q = lfd_quotient(math.sqrt, 0.0, 0.5, 1e-2, 5)
    assert q.value == pytest.approx(oracles.gamma(1.5), rel=1e-15)


def test_quotient_at_center_matches_spectral_alpha_one(rng):
    f = FractalSeries(1.0, rng.uniform(-1, 1, 8), center=0.5)
    q = lfd_quotient(f, 0.5, 1.0, 1e-2, 20)
    true = evaluate(lf_derivative(f), 0.5)
    assert abs(q.value - true) <= 1e-5 * (1 + abs(true))


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
def test_quotient_at_center_converges_for_fractional_orders(alpha):
    # f = c0 + c1 h^a + c2 h^2a: quotient - Gamma(1+a) c1 = Gamma(1+a) c2 h^a
    f = FractalSeries(alpha, [0.2, -0.7, 0.4])
    q = lfd_quotient(f, 0.0, alpha, 1e-2, 20)
    true = evaluate(lf_derivative(f), 0.0)
    predicted = [oracles.gamma(1 + alpha) * 0.4 * h**alpha for h in q.h_values]
    # differencing near x0 loses about eps / h**alpha absolute
    np.testing.assert_allclose(np.array(q.quotients) - true, predicted, rtol=1e-6, atol=1e-10)


def test_quotient_validation():
    with pytest.raises(DomainError):
        lfd_quotient(math.sqrt, 0.0, 0.5, 0.0, 5)
    with pytest.raises(DomainError):
        lfd_quotient(math.sqrt, 0.0, 0.5, 1e-2, 2)
    with pytest.raises(DomainError):
        lfd_quotient(math.sqrt, 0.0, 1.5, 1e-2, 5)


def test_quotient_evaluation_error():
    def bad(t):
        if t > 0.05:
            raise RuntimeError("boom")
        return t

    with pytest.raises(EvaluationError):
        lfd_quotient(bad, 0.0, 0.5, 0.1, 4)
    with pytest.raises(EvaluationError):
        lfd_quotient(lambda t: np.log(t - 1.0), 0.0, 0.5, 0.1, 4)


# -- lfi_quadrature -------------------------------------------------------------


def test_quadrature_constant():
    r = lfi_quadrature(lambda t: np.ones_like(t), 0.0, 1.0, 0.5, 64)
    assert r.value == pytest.approx(1.1283791671, rel=1e-10)
    assert abs(r.value - oracles.rgamma(1.5)) <= max(r.error_estimate, 1e-15)
    assert r.nodes == 128
    assert r.converged


def test_quadrature_sqrt():
    r = lfi_quadrature(np.sqrt, 0.0, 1.0, 0.5, 4096)
    assert r.value == pytest.approx(0.8862269255, abs=1e-6)
    f = FractalSeries(0.5, [0.0, 1.0])
    assert r.value == pytest.approx(definite_integral(f, 0.0, 1.0), rel=1e-6)


def test_quadrature_classical():
    r = lfi_quadrature(lambda t: t, 0.0, 1.0, 1.0, 64)
    assert r.value == pytest.approx(0.5, rel=1e-14)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.0])
@pytest.mark.parametrize("k", range(9))
def test_quadrature_basis_functions(alpha, k):
    f = FractalSeries.basis(alpha, k, center=0.5)
    true = definite_integral(f, 0.5, 1.7)
    r = lfi_quadrature(f, 0.5, 1.7, alpha, 4096)
    assert abs(r.value - true) <= max(1e-6 * abs(true), 1e-9)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.0])
@pytest.mark.parametrize("k", range(9))
def test_quadrature_refinement_shrinks_estimate(alpha, k):
    f = FractalSeries.basis(alpha, k)
    e = [lfi_quadrature(f, 0.0, 1.0, alpha, n).error_estimate for n in (256, 512, 1024, 2048)]
    # once at the rounding floor the estimate is noise
    assert all(b <= max(a, 1e-14) for a, b in zip(e, e[1:]))


def test_quadrature_nonconvergence_flag():
    r = lfi_quadrature(lambda t: np.sin(200.0 * t), 0.0, 1.0, 0.5, 4)
    assert not r.converged


def test_quadrature_validation():
    with pytest.raises(DomainError):
        lfi_quadrature(np.sqrt, 1.0, 1.0, 0.5)
    with pytest.raises(DomainError):
        lfi_quadrature(np.sqrt, 0.0, 1.0, 0.5, 1)


# -- holder_exponent ------------------------------------------------------------


def test_holder_sqrt():
    est = holder_exponent(np.sqrt, 0.0, 1e-6, 1e-2, 16)
    assert est.exponent == pytest.approx(0.5, abs=0.01)
    assert est.r_squared == pytest.approx(1.0, abs=1e-9)
    assert est.window == (1e-6, 1e-2)


def test_holder_smooth_point():
    est = holder_exponent(lambda t: t * t + 3.0, 1.0, 1e-6, 1e-2, 16)
    assert est.exponent == pytest.approx(1.0, abs=0.02)


@pytest.mark.parametrize("beta", [0.3, 0.5, 0.8, 1.0])
def test_holder_recovers_power(beta):
    x0 = 0.7
    est = holder_exponent(lambda t: np.abs(t - x0) ** beta, x0, 1e-6, 1e-2, 24)
    assert est.exponent == pytest.approx(beta, abs=0.02)


def test_holder_degenerate():
    with pytest.raises(DegenerateError):
        holder_exponent(lambda t: 2.0 + 0.0 * t, 0.0, 1e-6, 1e-2, 16)


def test_holder_validation():
    with pytest.raises(DomainError):
        holder_exponent(np.sqrt, 0.0, 1e-2, 1e-6, 16)
    with pytest.raises(DomainError):
        holder_exponent(np.sqrt, 0.0, 1e-6, 1e-2, 4)


# -- riemann_sum_diagnostic -----------------------------------------------------


def test_riemann_classical():
    for n, s in riemann_sum_diagnostic(lambda t: np.ones_like(t), 0.0, 2.5, 1.0, [1, 3, 7, 100]):
        assert s == pytest.approx(2.5, rel=1e-15)


def test_riemann_half_order_closed_form():
    sums = riemann_sum_diagnostic(lambda t: np.ones_like(t), 0.0, 1.0, 0.5, [1, 4, 16])
    for n, s in sums:
        assert s == pytest.approx(n**0.5 * oracles.rgamma(1.5), rel=1e-14)


def test_riemann_growth_ratio():
    (_, s100), (_, s400) = riemann_sum_diagnostic(lambda t: np.ones_like(t), 0.0, 1.0, 0.5, [100, 400])
    assert s400 / s100 == pytest.approx(2.0, abs=1e-12)


def test_riemann_validation():
    one = lambda t: np.ones_like(t)  # noqa: E731
    with pytest.raises(DomainError):
        riemann_sum_diagnostic(one, 0.0, 1.0, 0.5, [4, 2])
    with pytest.raises(DomainError):
        riemann_sum_diagnostic(one, 0.0, 1.0, 0.5, [0])
    with pytest.raises(DomainError):
        riemann_sum_diagnostic(one, 1.0, 0.0, 0.5, [2])
