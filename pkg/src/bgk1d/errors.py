"""Exception types shared across the solver."""


class ConfigError(ValueError):
    """Bad configuration file or parameter values. CLI exit code 2."""


class NumericalError(RuntimeError):
    """The run reached a physically invalid or degenerate state. CLI exit code 3."""

    def __init__(self, message, step=None, cell=None):
        self.step = step
        self.cell = cell
        ctx = []
        if step is not None:
            ctx.append(f"step {step}")
        if cell is not None:
            ctx.append(f"cell {cell}")
        if ctx:
            message = f"{message} ({', '.join(ctx)})"
        super().__init__(message)


class NonPositiveDensity(NumericalError):
    """rho_i <= 0 in a spatial cell; the state is invalid or under-resolved."""


class NonPositiveTemperature(NumericalError):
    """T_i <= 0 in a spatial cell; the state is invalid or under-resolved."""


class SingularCorrection(NumericalError):
    """The 3x3 conservation-correction system is numerically singular,
    which indicates a degenerate velocity grid (too few cells or extreme
    truncation)."""
