"""Monic cubic solver: trig branch, clamp band, hyperbolic continuation."""

import math
import random

import numpy as np
import pytest

from otto_rel import (
    CubicSolveError,
    MonicCubic,
    discriminant,
    principal_trig_root,
    relativistic_factor,
)
from otto_rel.optima import efficiency_cubic
from otto_rel import SUDDEN_EXPANSION
from _reference import REFERENCE


def from_roots(r1, r2, r3):
    return MonicCubic(
        a2=-(r1 + r2 + r3),
        a1=r1 * r2 + r1 * r3 + r2 * r3,
        a0=-r1 * r2 * r3,
    )


def acos_argument(cubic):
    a2, a1, a0 = cubic.a2, cubic.a1, cubic.a0
    spread = a2 * a2 - 3.0 * a1
    return -(2 * a2**3 - 9 * a2 * a1 + 27 * a0) / (2 * spread * math.sqrt(spread))


def test_three_real_roots_returns_largest():
    cubic = from_roots(-2.0, 0.5, 3.0)
    assert discriminant(cubic) > 0.0
    assert principal_trig_root(cubic) == pytest.approx(3.0, rel=1e-12)


def test_single_real_root_positive_branch():
    # real root at 10 plus a complex pair: acos argument exceeds +1
    cubic = MonicCubic(a2=-12.0, a1=21.01, a0=-10.1)
    assert discriminant(cubic) < 0.0
    assert acos_argument(cubic) > 1.0
    assert principal_trig_root(cubic) == pytest.approx(10.0, rel=1e-12)


def test_single_real_root_negative_branch():
    cubic = MonicCubic(a2=12.0, a1=21.01, a0=10.1)
    assert acos_argument(cubic) < -1.0
    assert principal_trig_root(cubic) == pytest.approx(-10.0, rel=1e-12)


def test_double_root_hits_clamp_band():
    # (y - 1)^2 (y + 2): argument is exactly -1 in exact arithmetic
    cubic = from_roots(1.0, 1.0, -2.0)
    assert acos_argument(cubic) == pytest.approx(-1.0, abs=1e-12)
    assert principal_trig_root(cubic) == pytest.approx(1.0, rel=1e-7)
    # (y + 1)^2 (y - 2): argument +1, largest root is the simple one
    cubic = from_roots(-1.0, -1.0, 2.0)
    assert principal_trig_root(cubic) == pytest.approx(2.0, rel=1e-9)


def test_monotone_cubic_bisection():
    # y^3 + y - 2 has no stationary points; root at 1
    cubic = MonicCubic(a2=0.0, a1=1.0, a0=-2.0)
    assert cubic.a2**2 - 3 * cubic.a1 < 0
    assert principal_trig_root(cubic) == pytest.approx(1.0, rel=1e-12)
    # (y + 1)^3 is the degenerate boundary case spread == 0
    cubic = MonicCubic(a2=3.0, a1=3.0, a0=1.0)
    assert principal_trig_root(cubic) == pytest.approx(-1.0, abs=1e-5)


def test_residual_gate_raises():
    # an impossible tolerance turns the tiny rounding residual into an error
    cubic = MonicCubic(a2=0.0, a1=-3.0, a0=-1.0)
    assert abs(cubic(principal_trig_root(cubic))) > 0.0
    with pytest.raises(CubicSolveError):
        principal_trig_root(cubic, residual_tol=0.0)
    # a badly scaled cubic loses more digits than the default gate allows;
    # the solver must refuse rather than hand back a silently wrong root
    with pytest.raises(CubicSolveError):
        principal_trig_root(MonicCubic(a2=-1e8, a1=1.0, a0=1.0))


def test_coefficients_must_be_finite():
    with pytest.raises(ValueError):
        MonicCubic(a2=math.nan, a1=0.0, a0=1.0)
    with pytest.raises(ValueError):
        MonicCubic(a2=0.0, a1=math.inf, a0=1.0)


def test_callable_and_scale():
    cubic = MonicCubic(a2=2.0, a1=-3.0, a0=0.5)
    y = 1.7
    assert cubic(y) == pytest.approx(y**3 + 2 * y**2 - 3 * y + 0.5, rel=1e-15)
    assert cubic.coefficient_scale() == 3.0


def test_random_cubics_against_numpy():
    rng = random.Random(20240817)
    checked = 0
    while checked < 2000:
        a2 = rng.uniform(-10, 10)
        a1 = rng.uniform(-10, 10)
        a0 = rng.uniform(-10, 10)
        cubic = MonicCubic(a2=a2, a1=a1, a0=a0)
        root = principal_trig_root(cubic)
        np_roots = np.roots([1.0, a2, a1, a0])
        reals = [r.real for r in np_roots if abs(r.imag) <= 1e-7 * (1 + abs(r.real))]
        assert reals, (a2, a1, a0)
        tol = 1e-6 * max(1.0, abs(root))
        assert min(abs(root - r) for r in reals) <= tol
        assert max(reals) - root <= tol
        checked += 1


def test_residual_property_random():
    rng = random.Random(7)
    for _ in range(5000):
        cubic = MonicCubic(
            a2=rng.uniform(-20, 20), a1=rng.uniform(-20, 20), a0=rng.uniform(-20, 20)
        )
        root = principal_trig_root(cubic)
        assert abs(cubic(root)) <= 1e-9 * cubic.coefficient_scale()


def test_expansion_efficiency_cubic_uses_hyperbolic_branch():
    # coupling below 1/2 pushes the arccos argument above +1, so the real
    # stationary ratio comes from the cosh continuation
    g = 0.5 * relativistic_factor(0.5)
    assert g < 0.5
    cubic = efficiency_cubic(g, SUDDEN_EXPANSION)
    x = acos_argument(cubic)
    assert x > 1.0
    assert x == pytest.approx((g * g - 4 * g + 2) / (g * g), rel=1e-12)
    root = principal_trig_root(cubic)
    assert root == pytest.approx(REFERENCE["optima"]["tau=0.5,v=0.5"]["z_eta_se"], rel=1e-13)


def test_determinism():
    cubic = MonicCubic(a2=-0.3, a1=-1.7, a0=0.2)
    assert principal_trig_root(cubic) == principal_trig_root(cubic)
