"""Conservative Hermite correction of the discrete Maxwellian.

Truncating the velocity domain and using midpoint quadrature means the
discrete moments of the Maxwellian do not exactly match those of f. The fix:
multiply the Maxwellian by a1 + a2*mu + a3*(mu^2 - 1) (the first three
Hermite basis polynomials) with coefficients chosen per spatial cell so the
discrete (rho, m, E) of the product match f's exactly. The 3x3 system has a
closed-form solution in terms of the quadrature sums A_0..A_4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularCorrection
from .field import DistributionField
from .grid import PhaseSpaceGrid
from .moments import FluidMoments, scaled_velocities

# |d| below this (relative to A_2^3) means the velocity grid is degenerate.
# A well-resolved grid gives d close to -2.
SINGULARITY_RTOL = 1e-10


@dataclass(eq=False)
class CorrectionCoefficients:
    """Per-spatial-cell Hermite multiplier coefficients and their inputs."""

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    A: np.ndarray  # shape (n_x, 5): quadrature sums A_0..A_4
    det: np.ndarray


def quadrature_sums(moments: FluidMoments, grid: PhaseSpaceGrid) -> np.ndarray:
    """A_ki = dv / sqrt(2 pi T_i) * sum_j mu_ij^k exp(-mu_ij^2/2), k = 0..4."""
    mu = scaled_velocities(moments, grid)
    w = np.exp(-0.5 * mu * mu)
    scale = grid.dv / np.sqrt(2.0 * math.pi * moments.T)
    A = np.empty((grid.n_x, 5), dtype=np.float64)
    powers = np.ones_like(mu)
    for k in range(5):
        A[:, k] = scale * (powers * w).sum(axis=1)
        if k < 4:
            powers = powers * mu
    return A


def _solve_closed_form(A: np.ndarray):
    """Closed-form solution of the 3x3 matching system for A of shape (..., 5).

    Returns (a1, a2, a3, d). Matrix rows are
    [A0, A1, A2-A0; A1, A2, A3-A1; A2, A3, A4-A2], right-hand side (1, 0, 1).
    """
    A0, A1, A2, A3, A4 = (A[..., k] for k in range(5))
    d = A2**3 - 2.0 * A1 * A2 * A3 + A0 * A3**2 + A1**2 * A4 - A0 * A2 * A4
    a1 = (A1**2 + A2 * (2.0 * A2 - A0 - A4) - A3 * (2.0 * A1 - A3)) / d
    a2 = (A1 * (A4 - A2) + A3 * (A0 - A2)) / d
    a3 = (A1 * (A1 - A3) + A2 * (A2 - A0)) / d
    return a1, a2, a3, d


def solve_correction(A) -> tuple[float, float, float, float]:
    """Solve one cell's correction system. Returns (a1, a2, a3, det).

    Raises SingularCorrection when |det| falls below the threshold."""
    A = np.asarray(A, dtype=np.float64)
    d = float(
        A[2] ** 3 - 2.0 * A[1] * A[2] * A[3] + A[0] * A[3] ** 2
        + A[1] ** 2 * A[4] - A[0] * A[2] * A[4]
    )
    if abs(d) <= SINGULARITY_RTOL * max(1.0, abs(A[2]) ** 3):
        raise SingularCorrection(f"correction determinant {d} is numerically singular")
    a1, a2, a3, _ = _solve_closed_form(A)
    return float(a1), float(a2), float(a3), d


def build_correction(moments: FluidMoments, grid: PhaseSpaceGrid) -> CorrectionCoefficients:
    """Quadrature sums plus closed-form solve for every spatial cell."""
    A = quadrature_sums(moments, grid)
    d = (
        A[:, 2] ** 3 - 2.0 * A[:, 1] * A[:, 2] * A[:, 3] + A[:, 0] * A[:, 3] ** 2
        + A[:, 1] ** 2 * A[:, 4] - A[:, 0] * A[:, 2] * A[:, 4]
    )
    bad = np.flatnonzero(np.abs(d) <= SINGULARITY_RTOL * np.maximum(1.0, np.abs(A[:, 2]) ** 3))
    if bad.size:
        i = int(bad[0])
        raise SingularCorrection(
            f"correction determinant {d[i]} is numerically singular "
            f"(A = {A[i].tolist()})",
            cell=i,
        )
    a1, a2, a3, _ = _solve_closed_form(A)
    return CorrectionCoefficients(a1=a1, a2=a2, a3=a3, A=A, det=d)


def eval_modified_maxwellian(
    moments: FluidMoments,
    coeffs: CorrectionCoefficients,
    grid: PhaseSpaceGrid,
) -> DistributionField:
    """M~_ij = M_ij * (a1_i + a2_i mu_ij + a3_i (mu_ij^2 - 1)).

    The multiplier may make some entries negative; that is accepted, since
    the guarantee is about discrete moments, not pointwise positivity.
    """
    mu = scaled_velocities(moments, grid)
    prefactor = moments.rho / np.sqrt(2.0 * math.pi * moments.T)
    hermite = (
        coeffs.a1[:, None]
        + coeffs.a2[:, None] * mu
        + coeffs.a3[:, None] * (mu * mu - 1.0)
    )
    values = prefactor[:, None] * np.exp(-0.5 * mu * mu) * hermite
    return DistributionField(values, grid)
