import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import bgk1d as b


@pytest.fixture(scope="session")
def paper_grid():
    return b.build_grid(-1.25, 1.25, -7.0, 7.0, 256, 128)


@pytest.fixture(scope="session")
def paper_ic():
    return b.InitialCondition(
        inner_halfwidth=0.5,
        inner_state=b.MaxwellianState(1.000, 0.250, 1.000),
        outer_state=b.MaxwellianState(0.125, -0.10, 0.800),
    )


@pytest.fixture(scope="session")
def paper_config(paper_ic):
    return b.RunConfig(epsilon=0.01, cfl=1.95, final_time=0.16, ic=paper_ic)


def perturbed_maxwellian(grid, rng, amplitude=0.3):
    """A random strictly positive field with well-separated moments."""
    rho = rng.uniform(0.5, 2.0, grid.n_x)
    u = rng.uniform(0.2, 1.0, grid.n_x)
    T = rng.uniform(0.5, 2.0, grid.n_x)
    mu = (grid.v_centers[None, :] - u[:, None]) / np.sqrt(T)[:, None]
    base = rho[:, None] / np.sqrt(2.0 * np.pi * T)[:, None] * np.exp(-0.5 * mu * mu)
    noise = 1.0 + amplitude * rng.uniform(-1.0, 1.0, size=(grid.n_x, grid.n_v))
    return b.DistributionField(base * noise, grid)
