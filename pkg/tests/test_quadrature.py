import cmath
import logging
import math

import numpy as np
import pytest
from scipy import special

from crr.chain import gamma_seq
from crr.exceptions import DomainError, QuadratureDidNotConverge
from crr.opuc import measure_density_circle, measure_density_line, moment_first, opuc_norm_sq
from crr.params import ParamB
from crr.quadrature import (
    QuadratureResult,
    gamma_mismatch,
    integrate_circle,
    integrate_line,
    moment,
    off_diagonal_max,
    opuc_gram_matrix,
    orthogonality_matrix,
)

ORTHO_PARAMS = [ParamB(1.2, 0.5), ParamB(0.9), ParamB(2.5, -1.0)]


def test_quadrature_result():
    total = QuadratureResult(1.0 + 0j, 1e-12, 10) + QuadratureResult(2j, 1e-11, 5, converged=False)
    assert total.value == 1 + 2j
    assert total.error_estimate == pytest.approx(1.1e-11)
    assert total.evaluations == 15
    assert not total.converged
    with pytest.raises(DomainError):
        QuadratureResult(0j, -1.0, 1)
    with pytest.raises(DomainError):
        QuadratureResult(0j, 0.0, 0)


@pytest.mark.parametrize("s", [-0.1, 0.0, 0.7, 3.0, 6.0])
def test_integrate_circle_endpoint_singularity(s):
    # ∫ (sin²(θ/2))^s dθ = 2√π Γ(s+1/2)/Γ(s+1)
    expected = 2 * math.sqrt(math.pi) * math.exp(special.gammaln(s + 0.5) - special.gammaln(s + 1))
    res = integrate_circle(lambda t: math.sin(0.5 * t) ** (2 * s), s, tol=1e-10)
    assert res.value.real == pytest.approx(expected, rel=1e-9)
    assert res.value.imag == 0.0


def test_integrate_circle_complex_integrand():
    res = integrate_circle(lambda t: cmath.exp(2j * t) * math.sin(0.5 * t) ** 2, 1.0)
    # sin² = (1 - cos θ)/2 has no e^{-2iθ} component
    assert abs(res.value) <= 1e-10
    res = integrate_circle(lambda t: cmath.exp(1j * t) * math.sin(0.5 * t) ** 2, 1.0)
    assert res.value == pytest.approx(-0.5 * math.pi, abs=1e-10)


def test_integrate_circle_rejects_bad_arguments():
    with pytest.raises(DomainError, match="b_exponent"):
        integrate_circle(lambda t: 1.0, -0.5)
    with pytest.raises(DomainError, match="tol > 0"):
        integrate_circle(lambda t: 1.0, 0.0, tol=0.0)


def test_integrate_circle_budget(caplog):
    singular = lambda t: math.sin(0.5 * t) ** -0.8
    with caplog.at_level(logging.WARNING, logger="crr.quadrature"):
        res = integrate_circle(singular, -0.4, tol=1e-15, budget=3)
    assert not res.converged
    assert "exceeds tol" in caplog.text
    with pytest.raises(QuadratureDidNotConverge) as info:
        integrate_circle(singular, -0.4, tol=1e-15, budget=3, strict=True)
    assert not info.value.result.converged


def test_integrate_line():
    res = integrate_line(lambda x: 1 / (math.pi * (1 + x * x)))
    assert res.value.real == pytest.approx(1.0, abs=1e-10)
    res = integrate_line(lambda x: math.exp(-x * x), decay=5.0)
    assert res.value.real == pytest.approx(math.sqrt(math.pi), abs=1e-10)
    with pytest.raises(DomainError):
        integrate_line(lambda x: 1.0, decay=0.5)


@pytest.mark.parametrize("b", ORTHO_PARAMS + [ParamB(-0.2, 1.5)])
def test_circle_measure_is_a_probability_measure(b):
    res = integrate_circle(lambda t: measure_density_circle(b, t), b.lam)
    assert res.value.real == pytest.approx(1.0, abs=1e-9)
    assert moment(b, 0).value.real == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("b", [ParamB(1.0), ParamB(3.0, 2.0), ParamB(6.0, -0.5)])
def test_circle_measure_mass_for_smooth_endpoints(b):
    # away from the singular side the integrand is flat but not negligible
    res = integrate_circle(lambda t: measure_density_circle(b, t), b.lam, tol=1e-11)
    assert res.value.real == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("b", ORTHO_PARAMS)
def test_line_weight_is_a_probability_measure(b):
    res = integrate_line(lambda x: measure_density_line(b, x), decay=b.lam)
    assert res.value.real == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("b", ORTHO_PARAMS)
def test_first_moment(b):
    assert moment(b.shifted(-1), 1).value == pytest.approx(moment_first(b), abs=1e-9)


@pytest.mark.parametrize("b", ORTHO_PARAMS)
def test_orthogonality_matrix(b):
    matrix = orthogonality_matrix(b, 6)
    assert matrix.shape == (7, 7)
    assert off_diagonal_max(matrix) <= 1e-8
    assert gamma_mismatch(b, matrix) <= 1e-8
    assert matrix[0, 0] == pytest.approx(1.0, abs=1e-8)
    assert matrix[1, 1] == pytest.approx(1 / (2 * b.lam), abs=1e-8)
    assert np.allclose(np.diag(matrix), gamma_seq(b.lam, 6), atol=1e-8)


def test_orthogonality_matrix_needs_lambda_above_half():
    with pytest.raises(DomainError, match=r"lambda > 1/2"):
        orthogonality_matrix(ParamB(0.5, 1.0), 3)


@pytest.mark.parametrize("b", [ParamB(1.0, 1.0), ParamB(-0.2, -0.5)])
def test_opuc_gram_matrix(b):
    gram = opuc_gram_matrix(b, 3)
    expected = np.diag([opuc_norm_sq(b, n) for n in range(4)])
    assert np.allclose(gram, expected, atol=1e-8)


def test_off_diagonal_max():
    matrix = np.array([[1.0, -3e-9, 2e-10], [5.0, 0.5, 1e-9], [7.0, 8.0, 0.25]])
    assert off_diagonal_max(matrix) == 3e-9
    assert off_diagonal_max(np.ones((1, 1))) == 0.0
