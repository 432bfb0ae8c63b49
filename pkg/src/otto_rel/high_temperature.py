"""Hot-limit closed forms for the two asymmetric driving scenarios.

When both thermal occupations are large (beta_h omega_h << 1 at fixed
ratios) every cycle quantity collapses onto four reduced variables:

    z      = omega_c / omega_h   frequency ratio, 0 < z <= 1,
    tau    = beta_h / beta_c     inverse-temperature ratio, 0 < tau < 1,
    v                            oscillator velocity, 0 < v < 1,
    beta_h                       kept explicit as the energy scale.

Writing g = tau * f(v) with f the velocity reduction factor, the per-cycle
quantities are

    sudden compression (quenched A->B stroke):
        q_h  = [2 z^2 - g (z^2 + 1)] / (2 z^2 beta_h)
        q_c  = (g - z) / beta_h
        work = (1 - z) [2 z^2 - g (1 + z)] / (2 z^2 beta_h)

    sudden expansion (quenched C->D stroke):
        q_h  = (z - g) / (z beta_h)
        q_c  = [g - (1 + z^2)/2] / beta_h
        work = (1 - z) [z (1 + z) - 2 g] / (2 z beta_h)

Efficiency is work / q_h wherever q_h > 0; cycles with q_h <= 0 are not
engines and the efficiency functions return None for them (a typed
outcome, not an exception, so phase-diagram callers can consume every
sign combination).

The engine lower bounds are the positive roots of the work expressions:
z = [g + sqrt(g (g + 8))] / 4 for sudden compression and
z = [sqrt(1 + 8 g) - 1] / 2 for sudden expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    SUDDEN_COMPRESSION,
    SUDDEN_EXPANSION,
    PerformanceRecord,
    Scenario,
    relativistic_factor,
)

__all__ = [
    "ReducedParams",
    "qh_sc",
    "qc_sc",
    "work_sc",
    "eta_sc",
    "qh_se",
    "qc_se",
    "work_se",
    "eta_se",
    "qh",
    "qc",
    "work",
    "eta",
    "performance",
    "engine_lower_z_sc",
    "engine_lower_z_se",
]


@dataclass(frozen=True)
class ReducedParams:
    """Reduced operating point of the hot-limit cycle."""

    z: float
    tau: float
    v: float
    beta_h: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.z <= 1.0:
            raise ValueError(f"frequency ratio z must lie in (0, 1], got {self.z}")
        if not 0.0 < self.tau < 1.0:
            raise ValueError(f"temperature ratio tau must lie in (0, 1), got {self.tau}")
        if not 0.0 < self.v < 1.0:
            raise ValueError(f"velocity v must lie in (0, 1), got {self.v}")
        if not self.beta_h > 0.0:
            raise ValueError(f"beta_h must be positive, got {self.beta_h}")


def _g(r: ReducedParams) -> float:
    # Reduced cold coupling tau * f(v); every closed form depends on tau
    # and v only through this product.
    return r.tau * relativistic_factor(r.v)


# -- sudden compression -----------------------------------------------------


def qh_sc(r: ReducedParams) -> float:
    """Hot-bath heat for the sudden-compression cycle."""
    g = _g(r)
    return (2.0 * r.z * r.z - g * (r.z * r.z + 1.0)) / (2.0 * r.z * r.z * r.beta_h)


def qc_sc(r: ReducedParams) -> float:
    """Cold-bath heat for the sudden-compression cycle."""
    return (_g(r) - r.z) / r.beta_h


def work_sc(r: ReducedParams) -> float:
    """Net extracted work for the sudden-compression cycle."""
    g = _g(r)
    return (1.0 - r.z) * (2.0 * r.z * r.z - g * (1.0 + r.z)) / (2.0 * r.z * r.z * r.beta_h)


def eta_sc(r: ReducedParams) -> Optional[float]:
    """Efficiency work/q_h of the sudden-compression cycle, None if q_h <= 0."""
    heat = qh_sc(r)
    if heat <= 0.0:
        return None
    return work_sc(r) / heat


# -- sudden expansion -------------------------------------------------------


def qh_se(r: ReducedParams) -> float:
    """Hot-bath heat for the sudden-expansion cycle."""
    return (r.z - _g(r)) / (r.z * r.beta_h)


def qc_se(r: ReducedParams) -> float:
    """Cold-bath heat for the sudden-expansion cycle."""
    return (_g(r) - 0.5 * (1.0 + r.z * r.z)) / r.beta_h


def work_se(r: ReducedParams) -> float:
    """Net extracted work for the sudden-expansion cycle."""
    g = _g(r)
    return (1.0 - r.z) * (r.z * (1.0 + r.z) - 2.0 * g) / (2.0 * r.z * r.beta_h)


def eta_se(r: ReducedParams) -> Optional[float]:
    """Efficiency work/q_h of the sudden-expansion cycle, None if q_h <= 0.

    Bounded above by 1/2 everywhere: the quenched expansion stroke wastes
    at least half of the extractable work at any operating point.
    """
    heat = qh_se(r)
    if heat <= 0.0:
        return None
    return work_se(r) / heat


# -- scenario dispatch ------------------------------------------------------

_DISPATCH = {
    SUDDEN_COMPRESSION: (qh_sc, qc_sc, work_sc, eta_sc),
    SUDDEN_EXPANSION: (qh_se, qc_se, work_se, eta_se),
}


def _table(scenario: Scenario):
    try:
        return _DISPATCH[scenario]
    except KeyError:
        raise ValueError(
            "hot-limit closed forms cover only the two asymmetric scenarios "
            f"(one sudden stroke, one adiabatic), got {scenario}"
        ) from None


def qh(r: ReducedParams, scenario: Scenario) -> float:
    """Hot-bath heat for either asymmetric scenario."""
    return _table(scenario)[0](r)


def qc(r: ReducedParams, scenario: Scenario) -> float:
    """Cold-bath heat for either asymmetric scenario."""
    return _table(scenario)[1](r)


def work(r: ReducedParams, scenario: Scenario) -> float:
    """Net extracted work for either asymmetric scenario."""
    return _table(scenario)[2](r)


def eta(r: ReducedParams, scenario: Scenario) -> Optional[float]:
    """Efficiency for either asymmetric scenario, None when q_h <= 0."""
    return _table(scenario)[3](r)


def performance(r: ReducedParams, scenario: Scenario) -> PerformanceRecord:
    """Assemble the full hot-limit performance record at one point."""
    fn_qh, fn_qc, fn_work, fn_eta = _table(scenario)
    return PerformanceRecord(
        q_h=fn_qh(r), q_c=fn_qc(r), w_ext=fn_work(r), eta=fn_eta(r)
    )


# -- engine windows ---------------------------------------------------------


def engine_lower_z_sc(g: float) -> float:
    """Smallest frequency ratio with nonnegative work, sudden compression.

    Positive root of 2 z^2 - g (1 + z) = 0; equals 1 when g = 1, so the
    engine window closes as tau * f(v) -> 1.
    """
    if not 0.0 < g <= 1.0:
        raise ValueError(f"reduced coupling must lie in (0, 1], got {g}")
    return 0.25 * (g + math.sqrt(g * (g + 8.0)))


def engine_lower_z_se(g: float) -> float:
    """Smallest frequency ratio with nonnegative work, sudden expansion.

    Positive root of z (1 + z) - 2 g = 0; equals 1 when g = 1.
    """
    if not 0.0 < g <= 1.0:
        raise ValueError(f"reduced coupling must lie in (0, 1], got {g}")
    return 0.5 * (math.sqrt(1.0 + 8.0 * g) - 1.0)
