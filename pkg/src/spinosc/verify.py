"""Self-contained verification suite over a built-in parameter grid.

Each check contrasts an implementation route with an independent one
(closed form vs. eigenvectors, analytic derivatives vs. finite differences,
block spectra vs. the assembled truncated matrix) and reports the worst
residual seen.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fullspace import block_decomposition_check, symmetry_report
from .metric import eta, eta_from_vectors, verify_metric
from .model import ModelParams, build_block, sigma_z_residual
from .spectral import critical_coupling, locate_ep_numeric
from .thermo import finite_diff_check, partition_function, partition_function_closed

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _unbroken_broken_mus(mu_c: float) -> tuple[list[float], list[float]]:
    unbroken = [f * mu_c for f in (0.2, 0.5, 0.8)]
    broken = [f * mu_c for f in (1.2, 1.5, 2.0)]
    return unbroken, broken


def run_checks(alpha: float = 5.0, homega: float = 1.0, cutoff: int = 8) -> list[CheckResult]:
    results = []
    subspaces = range(6)

    worst = 0.0
    for n in subspaces:
        for mu in (0.0, 0.5, 1.0, 2.0, 3.0):
            params = ModelParams(alpha, homega, mu)
            h_norm = float(np.linalg.norm(build_block(params, n)))
            worst = max(worst, sigma_z_residual(params, n) / (1.0 + h_norm))
    results.append(
        CheckResult("sigma-z pseudo-hermiticity (blocks)", worst < 1e-12, f"max residual {worst:.3e}")
    )

    worst = 0.0
    for n in subspaces:
        probe = ModelParams(alpha, homega, 0.0)
        mu_c = critical_coupling(probe, n)
        located = locate_ep_numeric(alpha, homega, n, (0.0, mu_c + 1.0))
        worst = max(worst, abs(located - mu_c))
    results.append(
        CheckResult("coalescence location (bisection vs closed)", worst < 1e-10, f"max |diff| {worst:.3e}")
    )

    worst_route = 0.0
    worst_intertwine = 0.0
    metric_ok = True
    for n in subspaces:
        mu_c = critical_coupling(ModelParams(alpha, homega, 0.0), n)
        unbroken, broken = _unbroken_broken_mus(mu_c)
        for mu in unbroken + broken:
            params = ModelParams(alpha, homega, mu)
            closed = eta(params, n).matrix
            vectors = eta_from_vectors(params, n)
            worst_route = max(worst_route, float(np.max(np.abs(vectors - closed))))
            diag = verify_metric(params, n)
            metric_ok = metric_ok and diag.positive_definite and diag.det_error < 1e-10
            if mu in unbroken:
                h_norm = float(np.linalg.norm(build_block(params, n)))
                worst_intertwine = max(worst_intertwine, diag.intertwining_residual / h_norm)
    results.append(
        CheckResult(
            "metric routes agree (eigenvectors vs closed)", worst_route < 1e-10, f"max |diff| {worst_route:.3e}"
        )
    )
    results.append(
        CheckResult(
            "metric intertwines block (unbroken)",
            worst_intertwine < 1e-10 and metric_ok,
            f"max relative residual {worst_intertwine:.3e}",
        )
    )

    worst = 0.0
    for n in subspaces:
        mu_c = critical_coupling(ModelParams(alpha, homega, 0.0), n)
        unbroken, broken = _unbroken_broken_mus(mu_c)
        for mu in unbroken + broken:
            params = ModelParams(alpha, homega, mu)
            for tau in (0.5, 1.0, 5.0, 20.0):
                z_matrix = partition_function(params, n, tau)
                z_closed = partition_function_closed(params, n, tau)
                if abs(z_closed) < 1e-6:
                    continue
                worst = max(worst, abs(z_matrix - z_closed) / abs(z_closed))
    results.append(
        CheckResult("partition function dual route", worst < 1e-10, f"max relative |diff| {worst:.3e}")
    )

    worst = 0.0
    for n in (0, 2, 5):
        mu_c = critical_coupling(ModelParams(alpha, homega, 0.0), n)
        for mu, tau in ((0.5 * mu_c, 1.0), (0.6 * mu_c, 1.5), (1.25 * mu_c, 2.5)):
            report = finite_diff_check(ModelParams(alpha, homega, mu), n, tau, 1e-4 * tau)
            worst = max(worst, report.rel_err_d1, report.rel_err_d2)
    results.append(
        CheckResult("log-derivative finite differences", worst < 1e-6, f"max relative error {worst:.3e}")
    )

    worst = 0.0
    # Couplings that sit exactly on a block coalescence are excluded: a
    # defective block's eigenvalues carry sqrt(eps)-level conditioning, which
    # no dense solver can beat.
    for mu in (0.0, 0.6, 1.3, 3.0):
        check = block_decomposition_check(ModelParams(alpha, homega, mu), cutoff)
        worst = max(worst, check.max_deviation)
    results.append(
        CheckResult("truncated spectrum matches block union", worst < 1e-8, f"max deviation {worst:.3e}")
    )

    report = symmetry_report(ModelParams(alpha, homega, 1.0), cutoff)
    sym_ok = (
        report.commutator_residual < 1e-12 * report.h_norm
        and report.sigma_z_residual < 1e-12 * report.h_norm
        and report.parity_residual < 1e-12 * report.h_norm
        and report.pt_residual > 0.1 * report.h_norm
    )
    results.append(
        CheckResult(
            "full-space symmetries (grading, sigma-z, parity, no PT)",
            sym_ok,
            f"commutator {report.commutator_residual:.3e}, pt {report.pt_residual:.3e}",
        )
    )
    return results
