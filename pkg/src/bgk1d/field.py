"""Cell-centered distribution function values on a phase-space grid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .grid import PhaseSpaceGrid


@dataclass(eq=False)
class DistributionField:
    """PDF samples f[i, j] at the cell centers (x_i, v_j).

    Entries must be finite. Non-negativity is deliberately NOT enforced:
    the transport stencil is not positivity-preserving and the corrected
    Maxwellian may dip negative.
    """

    values: np.ndarray  # shape (n_x, n_v), float64
    grid: "PhaseSpaceGrid"

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.grid.n_x, self.grid.n_v):
            raise ValueError(
                f"field shape {self.values.shape} does not match grid "
                f"({self.grid.n_x}, {self.grid.n_v})"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("distribution field contains non-finite values")

    def copy(self) -> "DistributionField":
        return DistributionField(self.values.copy(), self.grid)
