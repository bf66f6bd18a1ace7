"""Discrete fluid moments (midpoint quadrature) and Maxwellian evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveDensity, NonPositiveTemperature
from .field import DistributionField
from .grid import PhaseSpaceGrid


@dataclass(eq=False)
class FluidMoments:
    """Per-spatial-cell moments. m = rho*u and E = rho*(u^2 + T) hold by
    construction; rho and T are strictly positive (violations abort)."""

    rho: np.ndarray
    mom: np.ndarray
    energy: np.ndarray
    u: np.ndarray
    T: np.ndarray


def compute_moments(f: DistributionField) -> FluidMoments:
    """Midpoint-quadrature moments of f.

    rho_i = dv * sum_j f_ij, mom_i = dv * sum_j v_j f_ij,
    energy_i = dv * sum_j v_j^2 f_ij; then u = mom/rho and
    T = energy/rho - u^2. Raises if any cell has rho <= 0 or T <= 0:
    clamping would silently break the conservation correction downstream.
    """
    grid = f.grid
    v = grid.v_centers
    vals = f.values
    rho = grid.dv * vals.sum(axis=1)
    mom = grid.dv * (vals * v).sum(axis=1)
    energy = grid.dv * (vals * (v * v)).sum(axis=1)

    bad = np.flatnonzero(~(rho > 0.0))
    if bad.size:
        raise NonPositiveDensity(f"rho = {rho[bad[0]]}", cell=int(bad[0]))
    u = mom / rho
    T = energy / rho - u * u
    bad = np.flatnonzero(~(T > 0.0))
    if bad.size:
        raise NonPositiveTemperature(f"T = {T[bad[0]]}", cell=int(bad[0]))
    return FluidMoments(rho=rho, mom=mom, energy=energy, u=u, T=T)


def scaled_velocities(moments: FluidMoments, grid: PhaseSpaceGrid) -> np.ndarray:
    """mu[i, j] = (v_j - u_i) / sqrt(T_i)."""
    return (grid.v_centers[None, :] - moments.u[:, None]) / np.sqrt(moments.T)[:, None]


def eval_maxwellian(moments: FluidMoments, grid: PhaseSpaceGrid) -> DistributionField:
    """M_ij = rho_i / sqrt(2 pi T_i) * exp(-mu_ij^2 / 2)."""
    mu = scaled_velocities(moments, grid)
    prefactor = moments.rho / np.sqrt(2.0 * math.pi * moments.T)
    values = prefactor[:, None] * np.exp(-0.5 * mu * mu)
    return DistributionField(values, grid)
