"""Closed-form results for the collective-spin model.

Covers the exactly solvable isotropic limit (gamma = 1, diagonal in the
Dicke basis), the mean-field tilt angle, the bosonic-fluctuation
(Holstein-Primakoff + Bogoliubov) moments in the thermodynamic limit for
gamma < 1, the per-phase chi^2 / xi1^2 parameters, and the advertised
finite-size scaling exponents at the critical field h = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .spincore import spin_flip_count


class Phase(enum.Enum):
    SYMMETRIC = "symmetric"
    BROKEN = "broken"
    CRITICAL = "critical"


class CriticalPointError(ValueError):
    """The requested closed form diverges at the critical point."""


class IsotropicBrokenError(ValueError):
    """gamma = 1, h < 1 has no fluctuation expansion; the Dicke-state
    closed forms apply there instead."""


def classify_phase(h: float) -> Phase:
    """symmetric for h > 1, critical at h = 1, broken for 0 <= h < 1."""
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    if h > 1.0:
        return Phase.SYMMETRIC
    if h == 1.0:
        return Phase.CRITICAL
    return Phase.BROKEN


def isotropic_energy(n_spins: int, m: float, h: float) -> float:
    """Energy of |S = N/2, M> in the isotropic model:

        E(M, h) = (2/N) (M - hN/2)^2 - (N/2) (1 + h^2).
    """
    spin_flip_count(n_spins / 2.0, m)
    return (2.0 / n_spins) * (m - h * n_spins / 2.0) ** 2 - (n_spins / 2.0) * (1.0 + h * h)


def isotropic_ground_m(n_spins: int, h: float) -> float:
    """Ground-state magnetization M0 of the isotropic model.

    M0 = N/2 for h >= 1 and N/2 - round(N(1-h)/2) below; exact half-way
    arguments (level crossings) round toward the larger M0.
    """
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    s = n_spins / 2.0
    if h >= 1.0:
        return s
    x = n_spins * (1.0 - h) / 2.0
    return s - float(math.ceil(x - 0.5))


def isotropic_level_crossings(n_spins: int) -> list[float]:
    """Fields h_j = 1 - (2j+1)/N > 0 where |S, S-j> and |S, S-j-1> cross."""
    if n_spins < 2:
        raise ValueError(f"n_spins must be >= 2, got {n_spins}")
    crossings = []
    j = 0
    while True:
        h = 1.0 - (2 * j + 1) / n_spins
        if h <= 0.0:
            break
        crossings.append(h)
        j += 1
    return crossings


def mean_field_angle(h: float) -> float:
    """Tilt theta0 of the mean-field spin direction: 0 for h >= 1, arccos h below."""
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    return 0.0 if h >= 1.0 else math.acos(h)


def hp_epsilon(h: float, gamma: float) -> float:
    """Bogoliubov rotation parameter tanh(theta) = epsilon with

        epsilon = (m^2 - gamma) / (2 h m - 3 m^2 - gamma + 2),  m = cos(theta0).

    |epsilon| >= 1 means the rotation (and the fluctuation expansion)
    breaks down, signalled with CriticalPointError.
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    if gamma == 1.0 and h < 1.0:
        # epsilon = -1 identically: the expansion has a zero mode
        raise CriticalPointError(
            f"no Bogoliubov rotation at h={h}, gamma=1: |epsilon| = 1"
        )
    m = 1.0 if h >= 1.0 else h  # cos(theta0) without the arccos round trip
    eps = (m * m - gamma) / (2.0 * h * m - 3.0 * m * m - gamma + 2.0)
    if abs(eps) >= 1.0:
        raise CriticalPointError(
            f"no Bogoliubov rotation at h={h}, gamma={gamma}: |epsilon| = {abs(eps)} >= 1"
        )
    return eps


@dataclass(frozen=True)
class TlPrediction:
    """Thermodynamic-limit moments and parameters at one (h, gamma, N).

    chi2 holds the per-phase closed form (in the broken phase the
    1/((N+2)(1-h^2)) intermediate form); chi2_leading carries the cruder
    broken-phase 1/N law and is None in the symmetric phase.
    """

    sx2: float
    sy2: float
    chi2: float
    xi1_2: float
    phase: Phase
    chi2_leading: float | None = None


def tl_prediction(h: float, gamma: float, n_spins: int) -> TlPrediction:
    """Closed-form transverse moments and metrology parameters.

    Symmetric phase (h > 1):

        <S_x^2> = (N/4) sqrt((h-gamma)/(h-1)),   <S_y^2> = (N/4) sqrt((h-1)/(h-gamma)),
        chi2 = xi1^2 = sqrt((h-1)/(h-gamma)).

    Broken phase (h < 1, gamma < 1):

        <S_x^2> = (N^2/4 + N/2)(1-h^2)
                  + (N/4) [(1-gamma) h^2 - (2-h^2-gamma)(1-h^2)] / sqrt((1-h^2)(1-gamma)),
        <S_y^2> = (N/4) sqrt((1-h^2)/(1-gamma)),
        xi1^2 = sqrt((1-h^2)/(1-gamma)),   chi2 = 1/((N+2)(1-h^2)).
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    if n_spins < 1:
        raise ValueError(f"n_spins must be >= 1, got {n_spins}")
    if h == 1.0:
        raise CriticalPointError("thermodynamic-limit moments diverge at h = 1")
    n = float(n_spins)
    if h > 1.0:
        ratio = (h - gamma) / (h - 1.0)
        value = math.sqrt((h - 1.0) / (h - gamma))
        return TlPrediction(
            sx2=0.25 * n * math.sqrt(ratio),
            sy2=0.25 * n * value,
            chi2=value,
            xi1_2=value,
            phase=Phase.SYMMETRIC,
        )
    if gamma == 1.0:
        raise IsotropicBrokenError(
            "gamma = 1, h < 1: zero mode in the fluctuation expansion; use the Dicke closed forms"
        )
    one_h2 = 1.0 - h * h
    one_g = 1.0 - gamma
    correction = ((1.0 - gamma) * h * h - (2.0 - h * h - gamma) * one_h2) / math.sqrt(one_h2 * one_g)
    return TlPrediction(
        sx2=(0.25 * n * n + 0.5 * n) * one_h2 + 0.25 * n * correction,
        sy2=0.25 * n * math.sqrt(one_h2 / one_g),
        chi2=1.0 / ((n + 2.0) * one_h2),
        xi1_2=math.sqrt(one_h2 / one_g),
        phase=Phase.BROKEN,
        chi2_leading=1.0 / n,
    )


def squeezing_boundary(gamma: float) -> float:
    """Broken-phase field h = sqrt(gamma) where xi1^2 crosses 1."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    return math.sqrt(gamma)


@dataclass(frozen=True)
class CriticalExponents:
    """Finite-size laws advertised at h = 1: chi^2 and xi^2 decay with
    exponent -2/3, the phase-uncertainty bound with -5/6, while the
    moment ratios 4<S_x^2>/N^2 and 4<S_y^2>/N^2 decay with -2/3 and
    -4/3."""

    chi2_exponent: float
    xi2_exponent: float
    qcr_exponent: float
    sx2_moment_exponent: float
    sy2_moment_exponent: float


def critical_scaling_prediction() -> CriticalExponents:
    """Advertised critical finite-size exponents (amplitudes are out of scope)."""
    return CriticalExponents(
        chi2_exponent=-2.0 / 3.0,
        xi2_exponent=-2.0 / 3.0,
        qcr_exponent=-5.0 / 6.0,
        sx2_moment_exponent=-2.0 / 3.0,
        sy2_moment_exponent=-4.0 / 3.0,
    )
