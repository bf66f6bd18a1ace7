"""Truncated phase-space mesh, run configuration, and initial data."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .field import DistributionField

# The transport stencils read cells i-2..i+2 around each point; with fewer
# than 5 spatial cells the periodic wrap would alias a cell onto itself.
MIN_NX = 5
MIN_NV = 3


@dataclass(frozen=True, eq=False)
class PhaseSpaceGrid:
    """Uniform (x, v) mesh with cell centers at the rectangle midpoints."""

    x_low: float
    x_high: float
    v_low: float
    v_high: float
    n_x: int
    n_v: int
    dx: float
    dv: float
    x_centers: np.ndarray
    v_centers: np.ndarray
    v_max_abs: float


def build_grid(x_low, x_high, v_low, v_high, n_x, n_v) -> PhaseSpaceGrid:
    """Build the uniform phase-space mesh.

    Cell centers follow the 1-based midpoint rule
    x_i = x_low + (i - 1/2) dx, i = 1..n_x (stored 0-based internally).
    """
    x_low, x_high = float(x_low), float(x_high)
    v_low, v_high = float(v_low), float(v_high)
    n_x, n_v = int(n_x), int(n_v)
    if not (x_high > x_low):
        raise ConfigError(f"x_high ({x_high}) must exceed x_low ({x_low})")
    if not (v_high > v_low):
        raise ConfigError(f"v_high ({v_high}) must exceed v_low ({v_low})")
    if n_x < MIN_NX:
        raise ConfigError(
            f"n_x = {n_x} is too small: the 4-point transport stencil with "
            f"periodic wrap needs n_x >= {MIN_NX}"
        )
    if n_v < MIN_NV:
        raise ConfigError(f"n_v = {n_v} must be >= {MIN_NV}")

    dx = (x_high - x_low) / n_x
    dv = (v_high - v_low) / n_v
    x_centers = x_low + (np.arange(n_x, dtype=np.float64) + 0.5) * dx
    v_centers = v_low + (np.arange(n_v, dtype=np.float64) + 0.5) * dv
    v_max_abs = max(abs(v_low), abs(v_high))
    return PhaseSpaceGrid(
        x_low, x_high, v_low, v_high, n_x, n_v, dx, dv,
        x_centers, v_centers, v_max_abs,
    )


@dataclass(frozen=True)
class MaxwellianState:
    """One (rho, u, T) fluid state; rho and T must be positive."""

    rho: float
    u: float
    T: float

    def __post_init__(self):
        if not (self.rho > 0):
            raise ConfigError(f"state density must be positive, got {self.rho}")
        if not (self.T > 0):
            raise ConfigError(f"state temperature must be positive, got {self.T}")


@dataclass(frozen=True)
class InitialCondition:
    """Piecewise-Maxwellian initial data: inner state for |x| < inner_halfwidth,
    outer state otherwise (ties go to the outer state)."""

    inner_halfwidth: float
    inner_state: MaxwellianState
    outer_state: MaxwellianState
    kind: str = "piecewise_maxwellian"

    def __post_init__(self):
        if self.kind != "piecewise_maxwellian":
            raise ConfigError(f"unknown initial-condition kind: {self.kind!r}")
        if not (self.inner_halfwidth > 0):
            raise ConfigError("inner_halfwidth must be positive")


@dataclass(frozen=True)
class RunConfig:
    epsilon: float  # Knudsen number
    cfl: float
    final_time: float
    ic: InitialCondition
    correction_enabled: bool = True
    output_every: int = 0  # snapshot cadence in steps; 0 = endpoints only

    def __post_init__(self):
        if not (self.epsilon > 0):
            raise ConfigError(f"epsilon must be strictly positive, got {self.epsilon}")
        if not (0 < self.cfl <= 2):
            raise ConfigError(f"cfl must satisfy 0 < cfl <= 2, got {self.cfl}")
        if self.cfl > 1.999:
            warnings.warn(
                f"cfl = {self.cfl} is very close to the nu = 2 exactness bound",
                stacklevel=2,
            )
        if not (self.final_time > 0):
            raise ConfigError(f"final_time must be positive, got {self.final_time}")
        if self.output_every < 0:
            raise ConfigError("output_every must be non-negative")


def sample_initial_condition(grid: PhaseSpaceGrid, ic: InitialCondition) -> DistributionField:
    """Sample the piecewise Maxwellian pointwise at the cell centers."""
    inner = np.abs(grid.x_centers) < ic.inner_halfwidth
    rho = np.where(inner, ic.inner_state.rho, ic.outer_state.rho)
    u = np.where(inner, ic.inner_state.u, ic.outer_state.u)
    T = np.where(inner, ic.inner_state.T, ic.outer_state.T)

    mu = (grid.v_centers[None, :] - u[:, None]) / np.sqrt(T)[:, None]
    values = rho[:, None] / np.sqrt(2.0 * math.pi * T)[:, None] * np.exp(-0.5 * mu * mu)
    return DistributionField(values, grid)
