"""Metric operator per subspace, built two independent ways.

The eigenvector route sums |L><L| over gauge-fixed left eigenvectors of the
block.  Biorthonormality <L_i|R_j> = delta_ij only fixes the product of the
left/right scales; the residual freedom (L, R) -> (c L, R / conj(c)) is
removed by the *balanced gauge* <L|L> = <R|R>, which is the unique choice
that makes the summed metric real symmetric with unit determinant.

The closed-form route evaluates the resulting entries directly.  With
b = mu*sqrt(n+1) and s = sign(delta):

  unbroken (D = sqrt(delta^2 - 4 b^2)):   [[|delta|, -2 s b], [-2 s b, |delta|]] / D
  broken   (Dt = sqrt(4 b^2 - delta^2)):  [[2 b, -s |delta|], [-s |delta|, 2 b]] / Dt

Both are positive definite with det = 1 away from the coalescence point,
where every entry diverges like (mu_c - mu)**-1/2 and construction is
refused.  In the broken region the summed metric does *not* intertwine the
block with its adjoint (the spectrum is complex there); the residual is
reported as a diagnostic, never asserted away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, adjoint_block, build_block, check_subspace_index
from .smallmat import DefectiveMatrix, Eigenpair2, eig2
from .spectral import PhaseRegion, classify, discriminant

__all__ = [
    "ExceptionalPoint",
    "BiorthoSystem",
    "MetricMatrix",
    "MetricDiagnostics",
    "biortho_system",
    "fix_gauge_balanced",
    "eta",
    "eta_from_vectors",
    "verify_metric",
]


class ExceptionalPoint(ArithmeticError):
    """Metric is singular at the eigenvalue coalescence point."""


@dataclass(frozen=True)
class BiorthoSystem:
    """Matched (right, left) eigenvector pairs with their overlap matrix."""

    pairs: tuple[Eigenpair2, Eigenpair2]
    overlap_matrix: np.ndarray


@dataclass(frozen=True)
class MetricMatrix:
    """Real symmetric 2x2 metric with unit determinant and its region tag."""

    matrix: np.ndarray
    region: PhaseRegion
    n: int


@dataclass(frozen=True)
class MetricDiagnostics:
    symmetry_residual: float
    det_error: float
    positive_definite: bool
    intertwining_residual: float


def biortho_system(m) -> BiorthoSystem:
    """Biorthonormalize the eigenvectors of a 2x2 block: <L_i|R_j> = delta_ij.

    Pairing comes from eig2 (the left vector of each pair is the adjoint
    eigenvector with the conjugated eigenvalue), which covers both the real
    unbroken spectrum and the conjugate-pair broken spectrum.  Raises
    DefectiveMatrix when the block is not diagonalizable.
    """
    pairs = eig2(m)
    normalized = []
    for p in pairs:
        right = p.right_vector / np.linalg.norm(p.right_vector)
        left = p.left_vector
        overlap = np.vdot(left, right)
        if abs(overlap) < 1e-12 * np.linalg.norm(left):
            raise DefectiveMatrix(
                "left/right overlap vanishes; block is numerically defective",
                eigenvalues=(pairs[0].value, pairs[1].value),
            )
        normalized.append(Eigenpair2(p.value, right, left / np.conj(overlap)))
    overlap_matrix = np.array(
        [[np.vdot(li.left_vector, rj.right_vector) for rj in normalized] for li in normalized]
    )
    return BiorthoSystem(tuple(normalized), overlap_matrix)


def fix_gauge_balanced(b: BiorthoSystem) -> BiorthoSystem:
    """Apply (L, R) -> (c L, R / conj(c)) so that ||L|| = ||R|| for each pair.

    |c| = sqrt(||R|| / ||L||) balances the norms; the phase of c rotates the
    largest component of each left vector onto the real axis, so real blocks
    keep real vectors (already-real vectors pass through untouched).
    Overlaps <L_i|R_j> are invariant under this rescaling.
    """
    gauged = []
    for p in b.pairs:
        norm_l = np.linalg.norm(p.left_vector)
        norm_r = np.linalg.norm(p.right_vector)
        if norm_l == 0.0 or norm_r == 0.0:
            raise ValueError("gauge fixing requires nonzero eigenvectors")
        magnitude = math.sqrt(norm_r / norm_l)
        anchor = complex(p.left_vector[int(np.argmax(np.abs(p.left_vector)))])
        if abs(anchor.imag) <= 1e-14 * abs(anchor):
            phase = 1.0
        else:
            phase = np.exp(-1j * np.angle(anchor))
        c = magnitude * phase
        gauged.append(Eigenpair2(p.value, p.right_vector / np.conj(c), c * p.left_vector))
    overlap_matrix = np.array(
        [[np.vdot(li.left_vector, rj.right_vector) for rj in gauged] for li in gauged]
    )
    return BiorthoSystem(tuple(gauged), overlap_matrix)


def _eta_closed(params: ModelParams, n: int) -> tuple[np.ndarray, PhaseRegion]:
    region = classify(params, n)
    if region is PhaseRegion.EXCEPTIONAL:
        raise ExceptionalPoint(
            f"metric is singular at mu = {params.mu} (coalescence for subspace n = {n})"
        )
    if params.mu == 0.0:
        # Hermitian limit: the closed forms reduce to the identity with no
        # 0/0; return it exactly instead of going through eigenvectors.
        return np.eye(2), PhaseRegion.UNBROKEN

    disc = discriminant(params, n)
    coupling = params.mu * math.sqrt(n + 1.0)
    sign = 1.0 if params.delta > 0.0 else -1.0
    if region is PhaseRegion.UNBROKEN:
        d = math.sqrt(disc)
        diag = abs(params.delta) / d
        off = -sign * 2.0 * coupling / d
    else:
        d = math.sqrt(-disc)
        diag = 2.0 * coupling / d
        off = -sign * abs(params.delta) / d
    return np.array([[diag, off], [off, diag]]), region


def eta(params: ModelParams, n: int) -> MetricMatrix:
    """Metric of the (n+1)-th subspace from the closed forms (mu = 0 gives identity)."""
    n = check_subspace_index(n)
    matrix, region = _eta_closed(params, n)
    return MetricMatrix(matrix, region, n)


def eta_from_vectors(params: ModelParams, n: int) -> np.ndarray:
    """Metric as sum_i |L_i><L_i| over balanced-gauge left eigenvectors.

    Independent of the closed forms; used to cross-validate them.  The result
    carries rounding-level imaginary parts from complex arithmetic in the
    broken region.
    """
    n = check_subspace_index(n)
    if classify(params, n) is PhaseRegion.EXCEPTIONAL:
        raise ExceptionalPoint(
            f"metric is singular at mu = {params.mu} (coalescence for subspace n = {n})"
        )
    system = fix_gauge_balanced(biortho_system(build_block(params, n)))
    out = np.zeros((2, 2), dtype=complex)
    for p in system.pairs:
        out += np.outer(p.left_vector, p.left_vector.conj())
    return out


def verify_metric(params: ModelParams, n: int) -> MetricDiagnostics:
    """Consistency diagnostics for the closed-form metric.

    The intertwining residual ||eta H - H^dagger eta||_F vanishes (to
    rounding) in the unbroken region only; in the broken region it is a
    finite documented quantity, reported but not required to be zero.
    """
    g = eta(params, n).matrix
    h = build_block(params, n)
    symmetry_residual = float(np.linalg.norm(g - g.T))
    det_error = abs(float(np.linalg.det(g)) - 1.0)
    positive_definite = bool(np.trace(g) > 0.0 and np.linalg.det(g) > 0.0)
    intertwining_residual = float(np.linalg.norm(g @ h - adjoint_block(h) @ g))
    return MetricDiagnostics(symmetry_residual, det_error, positive_definite, intertwining_residual)
