"""Gamma-matrix sets and the algebraic relations that define them.

A :class:`GammaSet` packages the matrices ``gamma^mu`` for one spacetime
signature: ``D4`` means 3+1 dimensions (four 4x4 matrices, metric
``diag(+,-,-,-)``), ``D2`` means 1+1 dimensions (two 2x2 matrices,
metric ``diag(+,-)``).  The defining relations are

    {gamma^mu, gamma^nu} = 2 g^{mu nu} 1,
    (gamma^mu)^dagger    = gamma^0 gamma^mu gamma^0,

which force every gamma^mu to be unitary, gamma^0 Hermitian, and the
spatial matrices anti-Hermitian.  All checks report entrywise max-norm
residuals; natural units (hbar = c = 1) throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matcore import UsageError, asmatrix, dagger, matrix_from_json, matrix_to_json, max_norm
from .fields import TXField

_DIM_INFO = {"D2": (2, 2), "D4": (4, 4)}  # dim tag -> (n gammas, matrix size)


@dataclass(frozen=True)
class GammaSet:
    """A concrete choice of gamma matrices for one spacetime signature."""

    dim: str
    gammas: tuple = field(default=())

    def __post_init__(self):
        if self.dim not in _DIM_INFO:
            raise UsageError(f"unknown dimension tag {self.dim!r}; expected 'D2' or 'D4'")
        count, size = _DIM_INFO[self.dim]
        mats = tuple(asmatrix(g) for g in self.gammas)
        if len(mats) != count:
            raise UsageError(f"{self.dim} needs {count} gamma matrices, got {len(mats)}")
        for g in mats:
            if g.shape != (size, size):
                raise UsageError(f"{self.dim} gamma matrices must be {size}x{size}, got {g.shape}")
        object.__setattr__(self, "gammas", mats)

    @property
    def size(self) -> int:
        return _DIM_INFO[self.dim][1]

    @property
    def metric(self) -> np.ndarray:
        return np.diag([1.0] + [-1.0] * (len(self.gammas) - 1))

    @property
    def beta(self) -> np.ndarray:
        return self.gammas[0]

    @property
    def alpha(self) -> tuple:
        """Dirac matrices alpha_j = gamma^0 gamma^j (Hermitian)."""
        g0 = self.gammas[0]
        return tuple(g0 @ gj for gj in self.gammas[1:])

    def to_json(self) -> dict:
        return {"dim": self.dim, "gammas": [matrix_to_json(g) for g in self.gammas]}

    @classmethod
    def from_json(cls, obj) -> "GammaSet":
        if not isinstance(obj, dict) or "dim" not in obj or "gammas" not in obj:
            raise UsageError("gamma-set JSON must be an object with 'dim' and 'gammas'")
        return cls(obj["dim"], tuple(matrix_from_json(m) for m in obj["gammas"]))


def clifford_residual(gset: GammaSet) -> float:
    """Max-norm defect of {gamma^mu, gamma^nu} = 2 g^{mu nu} 1 over all pairs."""
    return clifford_worst_pair(gset)[1]


def clifford_worst_pair(gset: GammaSet):
    """Worst anticommutator pair: ((mu, nu), residual)."""
    eye = np.eye(gset.size)
    metric = gset.metric
    worst, pair = -1.0, (0, 0)
    for mu, gmu in enumerate(gset.gammas):
        for nu, gnu in enumerate(gset.gammas):
            r = max_norm(gmu @ gnu + gnu @ gmu - 2.0 * metric[mu, nu] * eye)
            if r > worst:
                worst, pair = r, (mu, nu)
    return pair, worst


def hermiticity_residual(gset: GammaSet) -> float:
    """Max-norm defect of (gamma^mu)^dagger = gamma^0 gamma^mu gamma^0."""
    g0 = gset.gammas[0]
    return max(max_norm(dagger(g) - g0 @ g @ g0) for g in gset.gammas)


def unitarity_residual(gset: GammaSet) -> float:
    eye = np.eye(gset.size)
    return max(max_norm(dagger(g) @ g - eye) for g in gset.gammas)


def chirality(gset: GammaSet) -> np.ndarray:
    """The Hermitian chirality matrix of the set.

    In D4 this is i gamma^0 gamma^1 gamma^2 gamma^3; in D2 it is
    gamma^0 gamma^1 (equal to alpha, and to -i times the product
    i gamma^0 gamma^1, which is anti-Hermitian there).  Both square to
    the identity and anticommute with every gamma^mu.
    """
    g = gset.gammas
    if gset.dim == "D4":
        return 1j * g[0] @ g[1] @ g[2] @ g[3]
    return g[0] @ g[1]


def chirality_residuals(gset: GammaSet) -> dict:
    """Defects of the chirality-matrix invariants (square, anticommutation,
    Hermiticity)."""
    g5 = chirality(gset)
    eye = np.eye(gset.size)
    return {
        "square": max_norm(g5 @ g5 - eye),
        "anticommute": max(max_norm(g5 @ g + g @ g5) for g in gset.gammas),
        "hermitian": max_norm(g5 - dagger(g5)),
    }


def hamiltonian_symbol(gset: GammaSet, k, w: float) -> np.ndarray:
    """Plane-wave symbol H(k) = sum_j k_j alpha_j + w beta.

    ``w`` is the constant energy offset (scalar potential plus mass
    energy).  ``k`` is a scalar wavenumber in D2 and a 3-vector in D4.
    The result is Hermitian with eigenvalues +-sqrt(|k|^2 + w^2).
    """
    alphas = gset.alpha
    kvec = np.atleast_1d(np.asarray(k, dtype=float))
    if kvec.shape != (len(alphas),):
        raise UsageError(f"wavevector must have {len(alphas)} component(s), got {kvec.shape}")
    h = w * gset.beta.astype(complex)
    for kj, aj in zip(kvec, alphas):
        h = h + kj * aj
    return h


def plane_wave_mode(gset: GammaSet, k, w: float):
    """Positive-energy plane-wave mode: (omega, u) with H(k) u = omega u."""
    h = hamiltonian_symbol(gset, k, w)
    evals, evecs = np.linalg.eigh(h)
    return float(evals[-1]), evecs[:, -1]


def dirac_planewave_residual(gset: GammaSet, u, k, omega: float, w: float) -> float:
    """Algebraic first-order residual of a plane wave u e^{i(k.x - omega t)}.

    For the wave to solve the first-order equation with constant energy
    offset ``w``, the amplitude must satisfy
    (omega gamma^0 - k_j gamma^j - w) u = 0.
    """
    u = np.asarray(u, dtype=complex)
    kvec = np.atleast_1d(np.asarray(k, dtype=float))
    m = omega * gset.gammas[0] - w * np.eye(gset.size)
    for kj, gj in zip(kvec, gset.gammas[1:]):
        m = m - kj * gj
    return max_norm(m @ u)


def _w_samples(V, m: float, x: np.ndarray) -> np.ndarray:
    """Energy offset W(x) = V(x) + m from a scalar, array, or callable V."""
    if callable(V):
        v = np.asarray([V(xi) for xi in x], dtype=float)
    else:
        v = np.asarray(V, dtype=float)
        if v.ndim == 0:
            v = np.full(x.shape, float(v))
    if v.shape != x.shape:
        raise UsageError(f"potential samples must match the grid, got {v.shape} vs {x.shape}")
    return v + m


def klein_gordon_residual(gset: GammaSet, fld: TXField, V, m: float) -> float:
    """Second-order residual on a (t, x) grid.

    Evaluates, at interior grid points with second-order central
    differences,

        [d^mu d_mu + i (d_mu V) gamma^mu + W^2] Psi,   W = V + m,

    where the field is assumed uniform along any transverse directions
    (only gamma^0 and gamma^1 act).  The potential is spatial only, so
    its time derivative vanishes.
    """
    if fld.values.shape[-1] != gset.size:
        raise UsageError("field component count does not match the gamma set")
    if len(fld.t) < 5 or len(fld.x) < 5:
        raise UsageError("klein_gordon_residual needs at least 5 points per dimension")
    v = fld.values
    dt, dx = fld.dt, fld.dx
    w = _w_samples(V, m, fld.x)
    vs = w - m  # scalar potential samples
    dv_dx = np.gradient(vs, dx)

    core = v[1:-1, 1:-1]
    dtt = (v[2:, 1:-1] - 2 * core + v[:-2, 1:-1]) / dt**2
    dxx = (v[1:-1, 2:] - 2 * core + v[1:-1, :-2]) / dx**2

    g1 = gset.gammas[1]
    win = w[1:-1]
    dvin = dv_dx[1:-1]
    # the time part of the (d_mu V) i gamma^mu term vanishes: V is static
    res = (
        dtt
        - dxx
        + 1j * dvin[None, :, None] * np.einsum("ab,knb->kna", g1, core)
        + (win**2)[None, :, None] * core
    )
    return max_norm(res)
