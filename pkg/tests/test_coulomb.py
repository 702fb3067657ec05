import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from scipy import special

from crr.coulomb import (
    ErcwValue,
    a_coeffs,
    ab_sequences,
    appell_genfunc_residual,
    bessel_ab_closed,
    bessel_expansion_residual,
    bessel_j,
    bessel_j_series,
    bessel_sincos_residual,
    coulomb_ab_sequences,
    coulomb_expansion_residual,
    coulomb_f,
    coulomb_f_series,
    coulomb_ode_residual,
    curly_m,
    curly_n,
    ercw_value,
    gamow_factor,
    kummer_1f1,
    lambda_recurrence_residual,
    powell_recurrence_residual,
    sincos_expansion_residual,
    weber_genfunc_lhs,
    weber_genfunc_series,
    weber_radius,
    weber_window,
)
from crr.exceptions import DomainError, PoleError, SeriesDidNotConverge, WindowViolation
from crr.params import ParamB, SeriesControl
from crr.poly import crr_eval_monic, monic_at_i

PARAMS = [ParamB(1.2, 0.5), ParamB(0.9, -1.0), ParamB(2.5, 1.0), ParamB(0.3)]
ETAS = [-3.0, -1.0, 0.0, 1.5, 3.0]
W_GRID = np.linspace(0.5, 10.0, 12)


def _close(actual, expected, tol):
    return abs(actual - expected) <= tol * max(1.0, abs(expected))


# Kummer series


@pytest.mark.parametrize(
    "a, c, z",
    [
        (0.5, 1.5, 0.3),
        (1.2 + 0.5j, 2.4, 6j),
        (3 - 1j, 6.0, 20j),
        (0.3 + 2j, 0.6, -14j),
        (2.0, 0.5, -5.0),
    ],
)
def test_kummer_1f1_matches_mpmath(a, c, z):
    expected = complex(mpmath.hyp1f1(a, c, z))
    assert _close(kummer_1f1(a, c, z), expected, 1e-12)


def test_kummer_1f1_errors():
    with pytest.raises(PoleError):
        kummer_1f1(1.0, -2.0, 0.5)
    with pytest.raises(SeriesDidNotConverge) as info:
        kummer_1f1(1.0, 1.5, 10.0, SeriesControl(max_terms=5))
    assert info.value.terms == 5


# 𝒩, 𝔠, 𝓜


def test_curly_n_at_lambda_one_is_sinc():
    for w in np.linspace(-10.0, 10.0, 41):
        expected = 1.0 if w == 0 else math.sin(w) / w
        assert abs(curly_n(1.0, float(w)) - expected) <= 1e-12


@pytest.mark.parametrize("b", PARAMS)
@pytest.mark.parametrize("w", [-7.5, -1.0, 0.4, 3.0, 12.0, 20.0])
def test_curly_n_matches_mpmath(b, w):
    with mpmath.workdps(40):
        expected = complex(mpmath.exp(-1j * w) * mpmath.hyp1f1(b.b, 2 * b.lam, 2j * w)).real
    assert _close(curly_n(b, w), expected, 1e-11)


def test_curly_n_window():
    with pytest.raises(DomainError, match=r"\|w\| <= 20"):
        curly_n(1.0, 20.5)
    with pytest.raises(DomainError, match=r"\|w\| <= 20"):
        curly_n(ParamB(0.8, -1.0), -20.5)
    # the edge itself is accepted
    assert math.isfinite(curly_n(2.0, -20.0))
    with pytest.raises(DomainError, match="lambda > 0"):
        curly_n(ParamB(0.0, 1.0), 1.0)


def test_gamow_factor():
    assert gamow_factor(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamow_factor(2.0) == pytest.approx(1 / 3, rel=1e-14)
    assert gamow_factor(1 - 1j) == pytest.approx(0.108423, abs=1e-6)


@pytest.mark.parametrize("eta", [-2.0, -0.5, 0.7, 3.0])
def test_gamow_factor_is_sommerfeld(eta):
    # C_0(η)² = 2πη/(e^{2πη} − 1)
    expected = math.sqrt(2 * math.pi * eta / math.expm1(2 * math.pi * eta))
    assert gamow_factor(ParamB(1.0, -eta)) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("b", PARAMS)
def test_ercw_value(b):
    value = ercw_value(b, 2.5)
    assert isinstance(value, ErcwValue)
    assert value.n_value == curly_n(b, 2.5)
    assert value.gamow == gamow_factor(b)
    assert value.m_value == pytest.approx(curly_m(b, 2.5), rel=1e-14)
    with pytest.raises(DomainError, match="w > 0"):
        ercw_value(b, 0.0)


def test_curly_m_negative_w():
    assert curly_m(1.0, -1.0) == pytest.approx(-curly_m(1.0, 1.0), rel=1e-14)
    assert curly_m(2.0, -1.0) == pytest.approx(curly_m(2.0, 1.0), rel=1e-14)
    with pytest.raises(DomainError):
        curly_m(1.5, -1.0)


# Coulomb wave functions


def test_coulomb_f_zero_charge_is_sine():
    for w in np.linspace(-10.0, 10.0, 41):
        assert abs(coulomb_f(0, 0.0, float(w)) - math.sin(w)) <= 1e-11


@pytest.mark.parametrize("L", [0, 1, 2, 4])
@pytest.mark.parametrize("eta", ETAS)
def test_coulomb_f_matches_mpmath(L, eta):
    for w in (0.5, 2.0, 7.0, 10.0):
        expected = float(mpmath.coulombf(L, eta, w))
        assert _close(coulomb_f(L, eta, w), expected, 1e-10)


@pytest.mark.parametrize("L", [0, 1, 3])
@pytest.mark.parametrize("eta", ETAS)
def test_coulomb_f_near_origin(L, eta):
    gamow = gamow_factor(ParamB(L + 1, -eta))
    for w in (1e-3, 1e-5):
        ratio = coulomb_f(L, eta, w) / (gamow * w ** (L + 1))
        # F_L = C_L w^{L+1} (1 + ηw/(L+1) + O(w²))
        assert ratio == pytest.approx(1 + eta * w / (L + 1), rel=0, abs=10 * w * w)


@pytest.mark.parametrize("L", range(5))
@pytest.mark.parametrize("eta", ETAS)
def test_coulomb_ode(L, eta):
    for w in W_GRID:
        f = coulomb_f(L, eta, float(w))
        assert abs(coulomb_ode_residual(L, eta, float(w))) <= 1e-8 * max(1.0, abs(f))


@pytest.mark.parametrize("L", [1, 2, 3])
@pytest.mark.parametrize("eta", ETAS)
def test_powell_recurrence(L, eta):
    for w in (0.5, 1.7, 6.0, 10.0):
        assert powell_recurrence_residual(L, eta, w) <= 1e-9


@pytest.mark.parametrize("b", [ParamB(1.0), ParamB(2.0, -1.5), ParamB(1.5, 0.7), ParamB(0.6, -2.0)])
def test_lambda_recurrence(b):
    for w in (0.5, 2.5, 8.0):
        assert lambda_recurrence_residual(b, w) <= 1e-9


def test_coulomb_argument_checks():
    with pytest.raises(DomainError, match="L a non-negative integer"):
        coulomb_f(-1, 0.0, 1.0)
    with pytest.raises(DomainError, match="L >= 1"):
        powell_recurrence_residual(0, 1.0, 1.0)
    with pytest.raises(DomainError, match="w > 0"):
        coulomb_ode_residual(0, 1.0, -1.0)


# Bessel functions


@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 2.7])
def test_bessel_j_matches_power_series(alpha):
    lo = -10.0 if alpha == math.floor(alpha) else 0.1
    for w in np.linspace(lo, 10.0, 37):
        w = float(w)
        assert abs(bessel_j(alpha, w) - bessel_j_series(alpha, w)) <= 1e-11
        assert abs(bessel_j(alpha, w) - special.jv(alpha, w)) <= 1e-11


def test_bessel_j_half_integer_order():
    for w in (0.3, 2.0, 9.5):
        assert bessel_j(0.5, w) == pytest.approx(math.sqrt(2 / (math.pi * w)) * math.sin(w), rel=1e-12)


def test_bessel_j_special_points():
    assert bessel_j(0.0, 0.0) == 1.0
    assert bessel_j(2.7, 0.0) == 0.0
    assert bessel_j_series(1.0, -2.0) == pytest.approx(-bessel_j_series(1.0, 2.0))
    with pytest.raises(DomainError, match="alpha > -1/2"):
        bessel_j(-0.5, 1.0)
    with pytest.raises(DomainError):
        bessel_j(0.3, -1.0)


@pytest.mark.parametrize("alpha", [-0.4, -0.1])
def test_bessel_j_negative_order_is_infinite_at_origin(alpha):
    with pytest.raises(PoleError):
        bessel_j(alpha, 0.0)
    with pytest.raises(PoleError):
        bessel_j_series(alpha, 0.0)
    assert bessel_j(alpha, 1e-3) > 1.0


# Generating functions


@pytest.mark.parametrize("b", PARAMS)
def test_appell_generating_function(b):
    for x in (-3.0, -1.5, 0.0, 1.7, 3.0):
        for w in (-3.0, -0.8, 0.5, 3.0):
            scale = max(1.0, math.exp(x * w) * abs(curly_n(b, w)))
            assert appell_genfunc_residual(b, x, w, 60) <= 1e-10 * scale


def test_weber_window_and_radius():
    assert weber_window(0.0) == 0.5
    assert weber_radius(0.0) == 1.0
    assert weber_window(1.0) == 0.25
    assert weber_radius(3.0) == pytest.approx(1 / math.sqrt(10))


@pytest.mark.parametrize("b", PARAMS)
@pytest.mark.parametrize("x", [-2.0, 0.0, 0.5, 3.0])
def test_weber_generating_function(b, x):
    window = weber_window(x)
    for w in (-0.9 * window, -0.3 * window, 0.0, 0.5 * window, 0.9 * window):
        lhs = weber_genfunc_lhs(b, x, w)
        assert _close(weber_genfunc_series(b, x, w, 80), lhs, 1e-10)


def test_weber_window_violations():
    with pytest.raises(WindowViolation):
        weber_genfunc_lhs(1.0, 0.0, 0.5)
    with pytest.raises(DomainError, match="window"):
        weber_genfunc_lhs(1.0, 0.0, 0.1, window=1.5)
    # the window may be raised up to the radius
    assert weber_genfunc_lhs(1.0, 0.0, 0.6, window=1.0) == pytest.approx(1 / 1.36)


@pytest.mark.parametrize("L", [0, 1, 3])
@pytest.mark.parametrize("eta", ETAS)
def test_a_coeffs(L, eta):
    coeffs = a_coeffs(L, eta, 10)
    assert len(coeffs) == 11
    assert coeffs[0] == pytest.approx(1.0, abs=1e-12)
    assert coeffs[1] == pytest.approx(eta / (L + 1), abs=1e-12)
    b = ParamB(L + 1, -eta)
    for k, a in enumerate(coeffs):
        expected = crr_eval_monic(b, k, 0.0)
        assert _close(math.factorial(k) * a, expected, 1e-12)


def test_a_coeffs_example():
    assert a_coeffs(0, 2.0, 1) == pytest.approx([1.0, 2.0])
    with pytest.raises(DomainError):
        a_coeffs(0, 1.0, -1)


@pytest.mark.parametrize("L", [0, 2])
@pytest.mark.parametrize("eta", [-1.0, 0.0, 2.0])
def test_coulomb_f_series(L, eta):
    for w in (0.5, 1.0, 2.0):
        assert _close(coulomb_f_series(L, eta, w, 60), coulomb_f(L, eta, w), 1e-10)


@pytest.mark.parametrize("L", [0, 1, 3])
@pytest.mark.parametrize("eta", [-2.0, 0.0, 1.0])
def test_coulomb_expansion(L, eta):
    for x in (-1.0, 0.0, 1.5):
        for w in (0.5, 2.0, 3.0):
            scale = max(1.0, math.exp(x * w) * abs(coulomb_f(L, eta, w)))
            assert coulomb_expansion_residual(L, eta, x, w, 60) <= 1e-10 * scale


@pytest.mark.parametrize("alpha", [0.0, 0.3, 2.7])
def test_bessel_expansion(alpha):
    for x in (-2.0, 0.0, 1.0):
        for w in (0.5, 1.5, 3.0):
            assert bessel_expansion_residual(alpha, x, w, 60) <= 1e-10 * max(1.0, math.exp(x * w))


# sine/cosine sequences


def test_ab_sequences_start():
    assert ab_sequences(ParamB(2.0, 1.0), 1) == ([1.0, -0.5], [0.0, 1.0])
    a, b = ab_sequences(ParamB(1.3, -0.4), 1)
    assert a[1] == pytest.approx(0.4 / 1.3)
    assert b[1] == pytest.approx(1.0)


@pytest.mark.parametrize("b", PARAMS)
def test_ab_sequences_are_parts_of_monic_at_i(b):
    a, bseq = ab_sequences(b, 15)
    for n in range(16):
        plus, minus = crr_eval_monic(b, n, 1j), crr_eval_monic(b, n, -1j)
        at_i = monic_at_i(b, n)
        assert _close(2 * a[n], (plus + minus).real, 1e-12)
        assert _close(2 * bseq[n], ((plus - minus) / 1j).real, 1e-12)
        assert _close(complex(a[n], bseq[n]), at_i, 1e-12)


def test_coulomb_ab_sequences():
    assert coulomb_ab_sequences(1, 2.0, 6) == ab_sequences(ParamB(2.0, -2.0), 6)


@pytest.mark.parametrize("b", PARAMS)
@pytest.mark.parametrize("which", ["cos", "sin", "combined"])
def test_sincos_expansions(b, which):
    for w in (-3.0, -1.2, 0.0, 0.7, 3.0):
        assert sincos_expansion_residual(b, w, 40, which) <= 1e-10


def test_sincos_rejects_unknown_kind():
    with pytest.raises(DomainError, match="which"):
        sincos_expansion_residual(1.0, 1.0, 5, "tan")  # type: ignore [arg-type]


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(27, 10)])
def test_bessel_closed_forms_are_exact(alpha):
    N = 30
    a, b = ab_sequences((alpha + Fraction(1, 2), Fraction(0)), N)
    a_even, b_odd = bessel_ab_closed(alpha, N)
    assert len(a_even) == N // 2 + 1 and len(b_odd) == (N + 1) // 2
    for n in range(N + 1):
        if n % 2:
            assert a[n] == 0
            assert b[n] == b_odd[n // 2]
        else:
            assert b[n] == 0
            assert a[n] == a_even[n // 2]


def test_bessel_closed_forms_float():
    a_even, b_odd = bessel_ab_closed(0.5, 4)
    assert a_even == pytest.approx([1.0, -4 / 3, 16 / 5])
    assert b_odd == pytest.approx([1.0, -2.0])
    with pytest.raises(DomainError):
        bessel_ab_closed(-0.5, 3)


@pytest.mark.parametrize("alpha", [0.0, 0.3, 2.7])
@pytest.mark.parametrize("which", ["cos", "sin", "combined"])
def test_bessel_sincos(alpha, which):
    for w in (-3.0, -0.5, 1.0, 3.0):
        assert bessel_sincos_residual(alpha, w, 40, which) <= 1e-10


def test_kummer_transformation():
    # 𝒩 is real: e^{-iw} 1F1(b; 2λ; 2iw) = e^{iw} 1F1(b̄; 2λ; −2iw)
    b, w = ParamB(1.7, -0.9), 4.2
    direct = cmath.exp(-1j * w) * kummer_1f1(b.b, 2 * b.lam, 2j * w)
    mirrored = cmath.exp(1j * w) * kummer_1f1(b.conj, 2 * b.lam, -2j * w)
    assert _close(direct, mirrored, 1e-12)
    assert abs(direct.imag) <= 1e-12 * max(1.0, abs(direct))
