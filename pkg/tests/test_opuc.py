import cmath
import math

import numpy as np
import pytest

from crr import opuc
from crr.exceptions import DomainError, MethodDisagreement, PoleError
from crr.opuc import (
    ComplexPolynomial,
    MeasureSpec,
    arccot,
    cayley_to_circle,
    cayley_to_line,
    cd_kernel_coeffs,
    cd_kernel_eval,
    cd_kernel_sum,
    circle_to_line_factor,
    kernel_orthogonality_residual,
    kernel_relation_residual,
    kernel_scale,
    measure_density_circle,
    moment_first,
    opuc_norm_sq,
    opuc_phi_eval,
    para_r_checked,
    para_r_eval,
    phi_at_zero,
    phi_coeffs,
    poly_star,
    r_coeffs,
    r_zeros,
    theta_to_line,
)
from crr.params import ParamB
from crr.poly import crr_eval_recurrence
from crr.utils import pochhammer
from crr.zeros import crr_zeros

ORTHO_PARAMS = [ParamB(1.2, 0.5), ParamB(0.9), ParamB(2.5, -1.0)]
CIRCLE_PARAMS = ORTHO_PARAMS + [ParamB(-0.3, 1.0), ParamB(0.2, -2.0)]
POINTS = [0.3 + 0.2j, -0.7j, 1.4 - 0.5j, cmath.exp(0.9j), cmath.exp(4.0j)]


def test_cayley_round_trip():
    assert cayley_to_circle(1.0) == pytest.approx(1j)
    assert cayley_to_circle(0.0) == pytest.approx(-1.0)
    for x in (-30.0, -1.0, 0.25, 7.0):
        zeta = cayley_to_circle(x)
        assert abs(zeta) == pytest.approx(1.0, abs=1e-15)
        assert cayley_to_line(zeta) == pytest.approx(x, rel=1e-12)


def test_cayley_to_line_errors():
    with pytest.raises(PoleError):
        cayley_to_line(1.0)
    with pytest.raises(DomainError, match=r"\|zeta\| = 1"):
        cayley_to_line(0.5j)


def test_theta_to_line_and_arccot():
    assert theta_to_line(math.pi) == pytest.approx(0.0, abs=1e-15)
    assert theta_to_line(0.5 * math.pi) == pytest.approx(1.0)
    assert arccot(0.0) == pytest.approx(0.5 * math.pi)
    assert arccot(-1e12) == pytest.approx(math.pi)
    for theta in (0.3, 2.0, 5.5):
        assert arccot(theta_to_line(theta)) == pytest.approx(0.5 * theta)


def test_circle_to_line_factor_links_r_and_p():
    for b in ORTHO_PARAMS:
        for n in range(7):
            for x in (-3.0, 0.1, 2.2):
                p = crr_eval_recurrence(b, n, x)
                via_circle = circle_to_line_factor(x, n) * para_r_eval(b, n, cayley_to_circle(x))
                assert abs(via_circle - p) <= 1e-10 * max(1.0, abs(p))


def test_star():
    p = ComplexPolynomial([1j, 2.0, 3 - 1j])
    assert p.star().tolist() == [3 + 1j, 2.0, -1j]
    assert poly_star(p, 3).tolist() == [0j, 3 + 1j, 2.0, -1j]
    with pytest.raises(DomainError):
        p.star(1)


def test_measure_normalization():
    spec = MeasureSpec.of(ParamB(1.0))
    assert spec.normalization == pytest.approx(1 / math.pi)
    assert spec.log_normalization == pytest.approx(-math.log(math.pi))
    # large lambda stays finite in log form
    assert math.isfinite(MeasureSpec.of(ParamB(400.0, 3.0)).log_normalization)
    with pytest.raises(DomainError, match="lambda > -1/2"):
        MeasureSpec.of(-0.5)


def test_density_is_symmetric_without_eta():
    for theta in (0.2, 1.0, 2.9):
        assert measure_density_circle(0.8, theta) == pytest.approx(
            measure_density_circle(0.8, 2 * math.pi - theta)
        )
    with pytest.raises(DomainError):
        measure_density_circle(0.8, 0.0)


@pytest.mark.parametrize("b", CIRCLE_PARAMS)
def test_phi_szego_agrees_with_hypergeometric(b):
    for n in range(8):
        phi = phi_coeffs(b, n)
        assert phi.degree == n
        assert phi.leading == pytest.approx(1.0)
        assert phi.coeffs[0] == pytest.approx(phi_at_zero(b, n), abs=1e-14)
        for z in POINTS:
            expected = opuc_phi_eval(b, n, z)
            assert abs(phi(z) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_opuc_norm_sq():
    assert opuc_norm_sq(ParamB(1.0), 1) == 0.75
    b = ParamB(1.3, -0.4)
    for n in range(6):
        expected = pochhammer(2 * b.lam + 1, n) * math.factorial(n) / abs(pochhammer(b.b + 1, n)) ** 2
        assert opuc_norm_sq(b, n) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("b", CIRCLE_PARAMS)
def test_cd_kernel_routes_agree(b):
    for n in (0, 1, 4):
        for z, w in [(0.3 + 0.2j, -0.7j), (cmath.exp(1j), cmath.exp(2.5j)), (1.5, 0.2 - 0.1j)]:
            closed = cd_kernel_eval(b, n, z, w)
            summed = cd_kernel_sum(b, n, z, w)
            from_coeffs = cd_kernel_coeffs(b, n, w)(z)
            assert abs(closed - summed) <= 1e-10 * max(1.0, abs(summed))
            assert abs(from_coeffs - summed) <= 1e-10 * max(1.0, abs(summed))


def test_cd_kernel_pole():
    z = cmath.exp(0.4j)
    with pytest.raises(PoleError):
        cd_kernel_eval(1.0, 3, z, z)
    assert cd_kernel_sum(1.0, 3, z, z).real > 0


@pytest.mark.parametrize("b", ORTHO_PARAMS)
@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_r_routes_agree(b, n):
    for z in POINTS + [1.0, -1.0]:
        values = [para_r_eval(b, n, z, method) for method in ("recurrence", "hypergeometric", "para")]
        scale = max(1.0, max(abs(v) for v in values))
        assert max(abs(u - v) for u in values for v in values) <= 1e-10 * scale
        assert para_r_checked(b, n, z) == values[0]
        assert r_coeffs(b, n)(z) == pytest.approx(values[0], rel=1e-10, abs=1e-10)


def test_r_at_one():
    b = ParamB(1.7, 0.6)
    for n in range(7):
        expected = pochhammer(2 * b.lam, n) / pochhammer(b.lam, n)
        assert para_r_eval(b, n, 1.0) == pytest.approx(expected, rel=1e-12)


def test_para_r_checked_reports_disagreement(monkeypatch):
    monkeypatch.setitem(opuc._R_METHODS, "para", lambda b, n, z: 0j)
    with pytest.raises(MethodDisagreement):
        para_r_checked(ParamB(1.2, 0.5), 3, 0.4j)


def test_para_r_eval_unknown_method():
    with pytest.raises(DomainError, match="method"):
        para_r_eval(1.0, 2, 0.5, method="bogus")  # type: ignore [arg-type]


@pytest.mark.parametrize("b", ORTHO_PARAMS + [ParamB(0.3, 2.0)])
@pytest.mark.parametrize("n", [1, 3, 6])
def test_r_zeros_on_unit_circle(b, n):
    zs = r_zeros(b, n)
    assert len(zs) == n
    assert np.all(np.abs(np.abs(zs) - 1.0) <= 1e-9)
    # images of the real zeros of P_n
    images = np.array([cayley_to_circle(x) for x in crr_zeros(b, n).positions])
    images = images[np.argsort(np.mod(np.angle(images), 2 * np.pi))]
    assert np.allclose(zs, images, atol=1e-9)


def test_kernel_scale():
    for lam in (0.6, 1.0, 2.5):
        for n in range(7):
            assert kernel_scale(lam, n) == pytest.approx(math.factorial(n) / pochhammer(lam, n), rel=1e-13)
    with pytest.raises(DomainError):
        kernel_scale(0.4, 2)


@pytest.mark.parametrize("b", ORTHO_PARAMS)
def test_kernel_relation(b):
    for n in range(0, 7):
        for z in POINTS + [1.0]:
            assert kernel_relation_residual(b, n, z) <= 1e-9


def test_kernel_relation_needs_lambda_above_half():
    with pytest.raises(DomainError, match=r"lambda > 1/2"):
        kernel_relation_residual(ParamB(0.5, 1.0), 2, 0.3j)


def test_kernel_orthogonality():
    b = ParamB(1.2, 0.5)
    for k in range(3):
        res = kernel_orthogonality_residual(b, 3, k)
        assert abs(res.value) <= 1e-8
    with pytest.raises(DomainError):
        kernel_orthogonality_residual(b, 3, 3)


def test_moment_first():
    assert moment_first(2.0) == pytest.approx(-0.5)
    b = ParamB(1.5, 2.0)
    assert moment_first(b) == pytest.approx((1 - b.b) / b.conj)
