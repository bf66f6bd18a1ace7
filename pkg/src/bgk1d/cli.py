"""Batch CLI: parse a config, run the solver, write CSV outputs.

Exit codes: 0 success, 2 configuration error, 3 numerical abort.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
import time as _time

from .errors import ConfigError, NumericalError
from .io import (
    parse_config,
    write_conservation,
    write_metadata,
    write_moments,
    write_snapshot,
)
from .moments import compute_moments
from .stepper import run


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="solver",
        description="1D1V Boltzmann-BGK solver with exactly conservative collisions",
    )
    p.add_argument("--config", help="flat key=value config file (defaults: built-in Riemann test)")
    p.add_argument("--output-dir", help="directory for output files (overrides config)")
    p.add_argument("--no-correction", action="store_true",
                   help="disable the conservative Maxwellian correction (overrides config)")
    p.add_argument("--quiet", action="store_true", help="suppress progress output")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    try:
        text = ""
        if args.config is not None:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        setup = parse_config(text)
        config = setup.config
        if args.no_correction:
            config = dataclasses.replace(config, correction_enabled=False)
        out_dir = args.output_dir if args.output_dir is not None else setup.output_dir
    except (ConfigError, OSError) as err:
        print(f"config error: {err}", file=sys.stderr)
        return 2

    os.makedirs(out_dir, exist_ok=True)
    started = _time.monotonic()
    try:
        result = run(setup.grid, config)
    except NumericalError as err:
        print(f"numerical abort: {err}", file=sys.stderr)
        return 3
    wall = _time.monotonic() - started

    for step, t, field in result.snapshots:
        write_snapshot(field, t, os.path.join(out_dir, f"pdf_{step:05d}.csv"))
        write_moments(compute_moments(field), setup.grid, t,
                      os.path.join(out_dir, f"moments_{step:05d}.csv"))
    write_conservation(result.series, os.path.join(out_dir, "conservation.csv"))
    write_metadata(setup.grid, config, result.timestepping, config.cfl, wall,
                   os.path.join(out_dir, "metadata.json"))

    if not args.quiet:
        ts = result.timestepping
        print(
            f"completed {ts.n_steps} steps to t = {config.final_time} "
            f"(dt = {ts.dt:.6e}, effective CFL = {ts.cfl_effective:.4f}, "
            f"correction = {'on' if config.correction_enabled else 'off'}) "
            f"in {wall:.2f}s"
        )
        print(f"max conservation deviations: "
              f"drho = {max(result.series.drho):.3e}, "
              f"dm = {max(result.series.dm):.3e}, "
              f"dE = {max(result.series.dE):.3e}")
        print(f"outputs written to {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
