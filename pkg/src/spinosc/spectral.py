"""Closed-form block spectra, phase classification, and exceptional-point location.

The discriminant delta**2 - 4*mu**2*(n+1) is always formed in real arithmetic
before any square root, so the unbroken/broken decision is a sign test rather
than a complex-rounding artifact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import ModelParams, check_subspace_index
from .smallmat import ep_tolerance

__all__ = [
    "PhaseRegion",
    "Spectrum2",
    "NoSignChange",
    "discriminant",
    "classify",
    "block_spectrum",
    "critical_coupling",
    "locate_ep_numeric",
]


class PhaseRegion(Enum):
    UNBROKEN = "Unbroken"
    BROKEN = "Broken"
    EXCEPTIONAL = "Exceptional"


class NoSignChange(ValueError):
    """Bisection bracket does not straddle a discriminant sign change."""


@dataclass(frozen=True)
class Spectrum2:
    """Eigenvalue pair of one block with its phase tag.

    e_plus has the larger real part in the unbroken region and the
    nonnegative imaginary part in the broken region; the sum is always the
    block trace (2n+1)*homega.
    """

    e_plus: complex
    e_minus: complex
    region: PhaseRegion
    discriminant: float


def discriminant(params: ModelParams, n: int) -> float:
    n = check_subspace_index(n)
    return params.delta**2 - 4.0 * params.mu**2 * (n + 1)


def classify(params: ModelParams, n: int) -> PhaseRegion:
    """Phase of the (n+1)-th subspace.

    The coalescence point is tagged as its own region instead of being folded
    into the unbroken side: the metric and the partition function are singular
    there, and callers must branch explicitly.
    """
    disc = discriminant(params, n)
    if abs(disc) < ep_tolerance(params.delta**2):
        return PhaseRegion.EXCEPTIONAL
    return PhaseRegion.UNBROKEN if disc > 0.0 else PhaseRegion.BROKEN


def block_spectrum(params: ModelParams, n: int) -> Spectrum2:
    """Eigenvalues (2n+1)*homega/2 +- sqrt(disc)/2 with a fixed branch order."""
    n = check_subspace_index(n)
    disc = discriminant(params, n)
    region = classify(params, n)
    center = 0.5 * (2 * n + 1) * params.homega
    if region is PhaseRegion.UNBROKEN:
        half = 0.5 * math.sqrt(disc)
        return Spectrum2(complex(center + half), complex(center - half), region, disc)
    if region is PhaseRegion.BROKEN:
        half = 0.5 * math.sqrt(-disc)
        return Spectrum2(complex(center, half), complex(center, -half), region, disc)
    return Spectrum2(complex(center), complex(center), region, disc)


def critical_coupling(params: ModelParams, n: int) -> float:
    """Coupling at which the two block eigenvalues coalesce: |delta| / (2 sqrt(n+1))."""
    n = check_subspace_index(n)
    return abs(params.delta) / (2.0 * math.sqrt(n + 1.0))


def locate_ep_numeric(
    alpha: float,
    homega: float,
    n: int,
    bracket: tuple[float, float],
    width: float = 1e-12,
) -> float:
    """Bisection on the discriminant sign over a mu bracket.

    Independent of critical_coupling: only evaluates delta**2 - 4*mu**2*(n+1)
    and halves the bracket until it is narrower than `width`.
    """
    n = check_subspace_index(n)
    homega = float(homega)
    if homega <= 0.0:
        raise ValueError(f"homega must be positive, got {homega}")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise ValueError(f"invalid bracket {bracket!r}")

    delta_sq = (homega - float(alpha)) ** 2

    def f(mu: float) -> float:
        return delta_sq - 4.0 * mu * mu * (n + 1)

    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NoSignChange(f"discriminant has the same sign at both ends of {bracket!r}")

    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
