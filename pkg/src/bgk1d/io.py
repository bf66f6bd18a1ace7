"""Config parsing and the text output formats (snapshot, moments, conservation).

All floats are printed with %.17g, which round-trips binary64 exactly; the
conservation plots live at the 1e-15 scale and need every bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .field import DistributionField
from .grid import (
    InitialCondition,
    MaxwellianState,
    PhaseSpaceGrid,
    RunConfig,
    build_grid,
)
from .moments import FluidMoments
from .stepper import ConservationSeries, TimeStepping

# Full default configuration: the Riemann test of the reference problem.
DEFAULTS = {
    "nx": 256,
    "nv": 128,
    "x_low": -1.25,
    "x_high": 1.25,
    "v_low": -7.0,
    "v_high": 7.0,
    "epsilon": 0.01,
    "cfl": 1.95,
    "final_time": 0.16,
    "inner_halfwidth": 0.5,
    "rho_inner": 1.0,
    "u_inner": 0.25,
    "T_inner": 1.0,
    "rho_outer": 0.125,
    "u_outer": -0.10,
    "T_outer": 0.8,
    "correction": True,
    "output_every": 0,
    "output_dir": ".",
}

_INT_KEYS = {"nx", "nv", "output_every"}
_BOOL_KEYS = {"correction"}
_STR_KEYS = {"output_dir"}


@dataclass(frozen=True)
class SolverSetup:
    """Everything resolved from a config file: grid, run config, output dir."""

    grid: PhaseSpaceGrid
    config: RunConfig
    output_dir: str


def _parse_value(key: str, raw: str, lineno: int):
    try:
        if key in _STR_KEYS:
            return raw
        if key in _BOOL_KEYS:
            low = raw.lower()
            if low in ("true", "false"):
                return low == "true"
            raise ValueError(f"expected true/false, got {raw!r}")
        if key in _INT_KEYS:
            return int(raw)
        return float(raw)
    except ValueError as err:
        raise ConfigError(f"line {lineno}: bad value for {key!r}: {err}") from None


def parse_config(text: str) -> SolverSetup:
    """Parse a flat `key = value` document ('#' starts a comment).

    Unrecognized keys are hard errors so that typos cannot silently fall
    back to defaults. Missing keys take the default Riemann-test values.
    """
    values = dict(DEFAULTS)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key not in DEFAULTS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if not raw:
            raise ConfigError(f"line {lineno}: empty value for {key!r}")
        values[key] = _parse_value(key, raw, lineno)

    grid = build_grid(
        values["x_low"], values["x_high"], values["v_low"], values["v_high"],
        values["nx"], values["nv"],
    )
    ic = InitialCondition(
        inner_halfwidth=values["inner_halfwidth"],
        inner_state=MaxwellianState(values["rho_inner"], values["u_inner"], values["T_inner"]),
        outer_state=MaxwellianState(values["rho_outer"], values["u_outer"], values["T_outer"]),
    )
    config = RunConfig(
        epsilon=values["epsilon"],
        cfl=values["cfl"],
        final_time=values["final_time"],
        ic=ic,
        correction_enabled=values["correction"],
        output_every=values["output_every"],
    )
    return SolverSetup(grid=grid, config=config, output_dir=values["output_dir"])


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_snapshot(f: DistributionField, time: float, path) -> None:
    """Snapshot format: '#' header lines (time, nx, nv, extents), then n_x
    lines of n_v comma-separated values each, i and j both ascending."""
    g = f.grid
    lines = [
        f"# time = {_fmt(time)}",
        f"# nx = {g.n_x}",
        f"# nv = {g.n_v}",
        f"# x_low = {_fmt(g.x_low)}",
        f"# x_high = {_fmt(g.x_high)}",
        f"# v_low = {_fmt(g.v_low)}",
        f"# v_high = {_fmt(g.v_high)}",
    ]
    for row in f.values:
        lines.append(",".join(_fmt(x) for x in row))
    _write_text(path, "\n".join(lines) + "\n")


def read_snapshot(path) -> tuple[np.ndarray, float, dict]:
    """Inverse of write_snapshot: (values, time, header dict)."""
    header = {}
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, raw = line[1:].partition("=")
                header[key.strip()] = raw.strip()
                continue
            if not line:
                continue
            try:
                rows.append([float(tok) for tok in line.split(",")])
            except ValueError as err:
                raise ConfigError(f"{path}: line {lineno}: {err}") from None
    for required in ("time", "nx", "nv"):
        if required not in header:
            raise ConfigError(f"{path}: missing '# {required} = ...' header line")
    values = np.array(rows, dtype=np.float64)
    if values.shape != (int(header["nx"]), int(header["nv"])):
        raise ConfigError(
            f"{path}: data shape {values.shape} does not match header "
            f"({header['nx']}, {header['nv']})"
        )
    return values, float(header["time"]), header


def write_moments(m: FluidMoments, grid: PhaseSpaceGrid, time: float, path) -> None:
    """CSV with header x,rho,u,T,m,E and one line per spatial cell. The time
    is carried in a leading '#' comment line."""
    lines = [f"# time = {_fmt(time)}", "x,rho,u,T,m,E"]
    for i in range(grid.n_x):
        lines.append(",".join(_fmt(x) for x in (
            grid.x_centers[i], m.rho[i], m.u[i], m.T[i], m.mom[i], m.energy[i],
        )))
    _write_text(path, "\n".join(lines) + "\n")


def write_conservation(series: ConservationSeries, path) -> None:
    """CSV: step,time,drho,dm,dE,min_f,min_mtilde, one line per step."""
    lines = ["step,time,drho,dm,dE,min_f,min_mtilde"]
    for k in range(len(series.steps)):
        lines.append(",".join([str(series.steps[k])] + [_fmt(x) for x in (
            series.times[k], series.drho[k], series.dm[k], series.dE[k],
            series.min_f[k], series.min_mtilde[k],
        )]))
    _write_text(path, "\n".join(lines) + "\n")


def write_metadata(
    grid: PhaseSpaceGrid,
    config: RunConfig,
    ts: TimeStepping,
    requested_cfl: float,
    wall_clock_seconds: float,
    path,
) -> None:
    """Echo of the resolved (post-adjustment) run parameters."""
    from . import __version__

    meta = {
        "version": __version__,
        "nx": grid.n_x,
        "nv": grid.n_v,
        "x_low": grid.x_low,
        "x_high": grid.x_high,
        "v_low": grid.v_low,
        "v_high": grid.v_high,
        "epsilon": config.epsilon,
        "cfl_requested": requested_cfl,
        "cfl_effective": ts.cfl_effective,
        "dt": ts.dt,
        "n_steps": ts.n_steps,
        "theta_half": ts.theta_half,
        "theta_formula": "theta(dt/2, eps) = dt*(dt + 24*eps)/((dt + 6*eps)*(dt + 8*eps))",
        "correction_enabled": config.correction_enabled,
        "output_every": config.output_every,
        "final_time": config.final_time,
        "diagnostic_summation": "plain double, fixed (i asc, j asc) order",
        "wall_clock_seconds": wall_clock_seconds,
    }
    _write_text(path, json.dumps(meta, indent=2) + "\n")


def _write_text(path, content: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
    except OSError as err:
        raise OSError(f"failed to write {path}: {err}") from err
