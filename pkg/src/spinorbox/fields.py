"""Spacetime-sampled spinor fields and their CSV interchange format.

A :class:`TXField` holds complex spinor samples on a uniform rectangular
(t, x) grid: ``values[k, n, c]`` is component ``c`` at time ``t[k]`` and
position ``x[n]``.  The CSV layout is one row per (t, x) point with
columns ``t, x, re_c0, im_c0, re_c1, im_c1[, ...]``, t-major.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .matcore import UsageError


def _check_uniform(axis: np.ndarray, name: str) -> float:
    if axis.ndim != 1 or len(axis) < 2:
        raise UsageError(f"{name} axis needs at least 2 samples")
    steps = np.diff(axis)
    h = float(steps[0])
    if h <= 0 or np.max(np.abs(steps - h)) > 1e-9 * max(1.0, abs(h)):
        raise UsageError(f"{name} axis must be uniformly increasing")
    return h


@dataclass(frozen=True)
class TXField:
    """Complex spinor samples on a uniform (t, x) grid."""

    t: np.ndarray
    x: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        x = np.asarray(self.x, dtype=float)
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 3 or v.shape[0] != len(t) or v.shape[1] != len(x):
            raise UsageError(f"values must have shape (nt, nx, ncomp), got {v.shape}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "values", v)
        _check_uniform(t, "t")
        _check_uniform(x, "x")

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def ncomp(self) -> int:
        return self.values.shape[2]

    def to_csv(self, path) -> None:
        ncomp = self.ncomp
        header = ["t", "x"]
        for c in range(ncomp):
            header += [f"re_c{c}", f"im_c{c}"]
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for k, tk in enumerate(self.t):
                for n, xn in enumerate(self.x):
                    row = [repr(float(tk)), repr(float(xn))]
                    for c in range(ncomp):
                        z = self.values[k, n, c]
                        row += [repr(float(z.real)), repr(float(z.imag))]
                    writer.writerow(row)

    @classmethod
    def from_csv(cls, path) -> "TXField":
        return cls(*read_field_csv(path))


def read_field_csv(path):
    """Lenient reader for the field CSV layout: (t, x, values) arrays.

    Unlike the :class:`TXField` constructor this accepts a single time
    row, which is how initial states travel through the CSV format.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[:2] != ["t", "x"] or (len(header) - 2) % 2 != 0:
            raise UsageError("field CSV must start with columns t,x,re_c0,im_c0,...")
        ncomp = (len(header) - 2) // 2
        rows = [r for r in reader if r]
    if not rows:
        raise UsageError("field CSV contains no data rows")
    data = np.asarray(rows, dtype=float)
    t = np.unique(data[:, 0])
    x = np.unique(data[:, 1])
    if len(t) * len(x) != len(data):
        raise UsageError("field CSV does not cover a full rectangular (t, x) grid")
    values = np.empty((len(t), len(x), ncomp), dtype=complex)
    ti = {v: i for i, v in enumerate(t)}
    xi = {v: i for i, v in enumerate(x)}
    for row in data:
        k, n = ti[row[0]], xi[row[1]]
        values[k, n, :] = row[2::2] + 1j * row[3::2]
    return t, x, values


def plane_wave_field(t, x, amplitude, k: float, omega: float) -> TXField:
    """u e^{i(k x - omega t)} sampled on the given axes."""
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    u = np.asarray(amplitude, dtype=complex)
    phase = np.exp(1j * (k * x[None, :] - omega * t[:, None]))
    return TXField(t, x, phase[:, :, None] * u[None, None, :])
