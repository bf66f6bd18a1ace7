"""Strict parsers for the solver's three text formats."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np


class FormatError(ValueError):
    """A solver output file does not match its documented format."""


def checksum(arr: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(arr, dtype=np.float64).tobytes()).hexdigest()[:16]


def _announce(kind: str, path, arr: np.ndarray) -> None:
    print(f"parsed {kind} {path}: {arr.size} values, checksum {checksum(arr)}")


@dataclass
class Snapshot:
    values: np.ndarray  # (n_x, n_v)
    time: float
    x_low: float
    x_high: float
    v_low: float
    v_high: float


def read_snapshot(path) -> Snapshot:
    """Snapshot format: '#' header lines (time, nx, nv, extents), then
    n_x comma-separated rows of n_v values each."""
    header: dict[str, str] = {}
    rows: list[list[float]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, sep, raw = line[1:].partition("=")
                if not sep:
                    raise FormatError(f"{path}: line {lineno}: malformed header {line!r}")
                header[key.strip()] = raw.strip()
                continue
            if not line:
                continue
            try:
                rows.append([float(tok) for tok in line.split(",")])
            except ValueError:
                raise FormatError(f"{path}: line {lineno}: non-numeric data") from None

    for key in ("time", "nx", "nv", "x_low", "x_high", "v_low", "v_high"):
        if key not in header:
            raise FormatError(f"{path}: missing '# {key} = ...' header")
    values = np.array(rows, dtype=np.float64)
    if values.ndim != 2 or values.shape != (int(header["nx"]), int(header["nv"])):
        raise FormatError(
            f"{path}: data shape {values.shape} does not match header "
            f"({header['nx']}, {header['nv']})"
        )
    _announce("snapshot", path, values)
    return Snapshot(
        values=values,
        time=float(header["time"]),
        x_low=float(header["x_low"]),
        x_high=float(header["x_high"]),
        v_low=float(header["v_low"]),
        v_high=float(header["v_high"]),
    )


@dataclass
class MomentProfiles:
    time: float
    x: np.ndarray
    rho: np.ndarray
    u: np.ndarray
    T: np.ndarray
    mom: np.ndarray
    energy: np.ndarray


_MOMENT_HEADER = "x,rho,u,T,m,E"


def read_moments(path) -> MomentProfiles:
    time = None
    data: list[list[float]] = []
    saw_header = False
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, raw = line[1:].partition("=")
                if key.strip() == "time":
                    time = float(raw.strip())
                continue
            if not line:
                continue
            if not saw_header:
                if line != _MOMENT_HEADER:
                    raise FormatError(
                        f"{path}: line {lineno}: expected header {_MOMENT_HEADER!r}, "
                        f"got {line!r}")
                saw_header = True
                continue
            try:
                fields = [float(tok) for tok in line.split(",")]
            except ValueError:
                raise FormatError(f"{path}: line {lineno}: non-numeric data") from None
            if len(fields) != 6:
                raise FormatError(f"{path}: line {lineno}: expected 6 columns")
            data.append(fields)
    if not saw_header:
        raise FormatError(f"{path}: missing {_MOMENT_HEADER!r} header line")
    if time is None:
        raise FormatError(f"{path}: missing '# time = ...' line")
    if not data:
        raise FormatError(f"{path}: no data rows")
    arr = np.array(data, dtype=np.float64)
    _announce("moments", path, arr)
    return MomentProfiles(time=time, x=arr[:, 0], rho=arr[:, 1], u=arr[:, 2],
                          T=arr[:, 3], mom=arr[:, 4], energy=arr[:, 5])


@dataclass
class ConservationHistory:
    step: np.ndarray
    time: np.ndarray
    drho: np.ndarray
    dm: np.ndarray
    dE: np.ndarray
    min_f: np.ndarray
    min_mtilde: np.ndarray


_CONS_HEADER = "step,time,drho,dm,dE,min_f,min_mtilde"


def read_conservation(path) -> ConservationHistory:
    data: list[list[float]] = []
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n")
        if first != _CONS_HEADER:
            raise FormatError(f"{path}: line 1: expected header {_CONS_HEADER!r}, "
                              f"got {first!r}")
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                fields = [float(tok) for tok in line.split(",")]
            except ValueError:
                raise FormatError(f"{path}: line {lineno}: non-numeric data") from None
            if len(fields) != 7:
                raise FormatError(f"{path}: line {lineno}: expected 7 columns")
            data.append(fields)
    if not data:
        raise FormatError(f"{path}: no data rows")
    arr = np.array(data, dtype=np.float64)
    _announce("conservation", path, arr)
    return ConservationHistory(
        step=arr[:, 0].astype(int), time=arr[:, 1], drho=arr[:, 2],
        dm=arr[:, 3], dE=arr[:, 4], min_f=arr[:, 5], min_mtilde=arr[:, 6],
    )
