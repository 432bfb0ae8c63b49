"""Real-root solver for monic cubics via the trigonometric method.

For y^3 + A y^2 + B y + C with A^2 - 3B > 0, substituting
y = t - A/3 gives a depressed cubic whose roots are

    t_k = (2/3) sqrt(A^2 - 3B) cos[(theta - 2 pi k) / 3],   k = 0, 1, 2,
    theta = arccos(x),   x = -(2 A^3 - 9 A B + 27 C) / [2 (A^2 - 3B)^{3/2}].

When |x| <= 1 all three roots are real and k = 0 yields the largest one
(the principal branch).  When |x| > 1 only one real root exists and the
same formula continues analytically with

    cos(arccos(x) / 3)  ->  sign(x) cosh(arccosh(|x|) / 3),

which this module applies once |x| exceeds 1 by more than a clamp
tolerance of 1e-12 (arguments inside the tolerance band are clamped onto
[-1, 1], covering double roots computed in floating point).  If
A^2 - 3B <= 0 the cubic is strictly monotone and the root is bracketed by
the Cauchy bound and bisected.

Every returned root is validated by back-substitution: the residual must
not exceed tol * max(1, |A|, |B|, |C|), failing which CubicSolveError is
raised rather than returning a silently wrong value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "MonicCubic",
    "CubicSolveError",
    "discriminant",
    "principal_trig_root",
]

#: Half-width of the band around |x| = 1 inside which the arccos argument
#: is clamped instead of switching to the hyperbolic branch.
CLAMP_EPS = 1e-12

#: Default relative residual tolerance for root validation.
RESIDUAL_TOL = 1e-9


class CubicSolveError(RuntimeError):
    """Raised when a computed root fails the residual validation."""


@dataclass(frozen=True)
class MonicCubic:
    """Monic cubic polynomial y^3 + a2 y^2 + a1 y + a0."""

    a2: float
    a1: float
    a0: float

    def __post_init__(self) -> None:
        for name in ("a2", "a1", "a0"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"coefficient {name} must be finite, got {value}")

    def __call__(self, y: float) -> float:
        return ((y + self.a2) * y + self.a1) * y + self.a0

    def coefficient_scale(self) -> float:
        return max(1.0, abs(self.a2), abs(self.a1), abs(self.a0))


def discriminant(cubic: MonicCubic) -> float:
    """Polynomial discriminant; positive iff three distinct real roots."""
    b, c, d = cubic.a2, cubic.a1, cubic.a0
    return (
        18.0 * b * c * d
        - 4.0 * b * b * b * d
        + b * b * c * c
        - 4.0 * c * c * c
        - 27.0 * d * d
    )


def _bisect_monotone(cubic: MonicCubic) -> float:
    # A^2 - 3B <= 0 makes the derivative nonnegative everywhere, so the
    # cubic is monotone with exactly one real root inside the Cauchy bound.
    bound = 1.0 + max(abs(cubic.a2), abs(cubic.a1), abs(cubic.a0))
    lo, hi = -bound, bound
    f_lo = cubic(lo)
    if f_lo == 0.0:
        return lo
    if cubic(hi) == 0.0:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = cubic(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) == (f_mid < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def principal_trig_root(cubic: MonicCubic, residual_tol: float = RESIDUAL_TOL) -> float:
    """Principal real root of the cubic (largest root when three are real).

    Uses the trigonometric form with the hyperbolic continuation described
    in the module docstring, falling back to bisection for monotone cubics.

    Raises
    ------
    CubicSolveError
        If the back-substituted residual exceeds
        residual_tol * max(1, |a2|, |a1|, |a0|).
    """
    a2, a1, a0 = cubic.a2, cubic.a1, cubic.a0
    spread = a2 * a2 - 3.0 * a1
    if spread <= 0.0:
        root = _bisect_monotone(cubic)
    else:
        half = math.sqrt(spread)
        x = -(2.0 * a2 * a2 * a2 - 9.0 * a2 * a1 + 27.0 * a0) / (2.0 * spread * half)
        if abs(x) <= 1.0:
            factor = math.cos(math.acos(x) / 3.0)
        elif abs(x) <= 1.0 + CLAMP_EPS:
            # Grazing a double root: the exact argument is +-1 up to rounding.
            factor = math.cos(math.acos(math.copysign(1.0, x)) / 3.0)
        else:
            factor = math.copysign(math.cosh(math.acosh(abs(x)) / 3.0), x)
        root = -a2 / 3.0 + (2.0 / 3.0) * half * factor

    residual = abs(cubic(root))
    allowed = residual_tol * cubic.coefficient_scale()
    if not residual <= allowed:
        raise CubicSolveError(
            f"root {root} of y^3 + {a2} y^2 + {a1} y + {a0} has residual "
            f"{residual:.3e} above tolerance {allowed:.3e}"
        )
    return root
