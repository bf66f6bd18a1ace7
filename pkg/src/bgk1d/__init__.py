"""Conservative 1D1V Boltzmann-BGK solver.

Strang splitting into transport and collision sub-steps; third-order
upwind-biased Lax-Wendroff transport with periodic boundaries; TR-BDF2-derived
theta-blend collisions; and a Hermite-corrected Maxwellian that makes discrete
mass, momentum, and energy exactly conserved on the truncated velocity grid.
"""

__version__ = "0.1.0"

from .collision import collision_step, collision_theta
from .correction import (
    CorrectionCoefficients,
    build_correction,
    eval_modified_maxwellian,
    quadrature_sums,
    solve_correction,
)
from .errors import (
    ConfigError,
    NonPositiveDensity,
    NonPositiveTemperature,
    NumericalError,
    SingularCorrection,
)
from .field import DistributionField
from .grid import (
    InitialCondition,
    MaxwellianState,
    PhaseSpaceGrid,
    RunConfig,
    build_grid,
    sample_initial_condition,
)
from .moments import FluidMoments, compute_moments, eval_maxwellian
from .stepper import (
    ConservationSeries,
    RunResult,
    TimeStepping,
    plan_timestepping,
    run,
    strang_step,
)
from .transport import courant_numbers, transport_step
