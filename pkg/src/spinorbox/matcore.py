"""Small dense complex-matrix helpers shared by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
Algebraic identities in this package are checked with the entrywise
max-norm, which is the canonical residual metric throughout.

Conventions: natural units (hbar = c = 1); energies set the scale and
lengths are inverse energies.  The Pauli matrices exported here are the
building blocks for every representation in :mod:`spinorbox.reps`.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


class UsageError(ValueError):
    """Caller error: malformed input, wrong shape, unknown name."""


class NumericalError(ArithmeticError):
    """Numerical failure: overflow, non-finite entries, lost precision."""


ID2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SX, SY, SZ)


def asmatrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise UsageError(f"expected a 2-d matrix, got ndim={a.ndim}")
    return a


def _require_square(a: np.ndarray) -> np.ndarray:
    a = asmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise UsageError(f"expected a square matrix, got shape {a.shape}")
    return a


def _require_finite(a: np.ndarray, what: str = "result") -> np.ndarray:
    if not np.all(np.isfinite(a)):
        raise NumericalError(f"{what} contains non-finite entries")
    return a


def max_norm(a) -> float:
    """Entrywise max-abs norm, the residual metric used package-wide."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def kron(a, b) -> np.ndarray:
    return _require_finite(np.kron(asmatrix(a), asmatrix(b)), "kron")


def dagger(a) -> np.ndarray:
    return asmatrix(a).conj().T


def conj(a) -> np.ndarray:
    return asmatrix(a).conj()


def transpose(a) -> np.ndarray:
    return asmatrix(a).T


def mul(a, b) -> np.ndarray:
    a, b = asmatrix(a), asmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise UsageError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return _require_finite(a @ b, "product")


def add(a, b) -> np.ndarray:
    a, b = asmatrix(a), asmatrix(b)
    if a.shape != b.shape:
        raise UsageError(f"cannot add shapes {a.shape} and {b.shape}")
    return _require_finite(a + b, "sum")


def sub(a, b) -> np.ndarray:
    a, b = asmatrix(a), asmatrix(b)
    if a.shape != b.shape:
        raise UsageError(f"cannot subtract shapes {a.shape} and {b.shape}")
    return _require_finite(a - b, "difference")


def scale(z, a) -> np.ndarray:
    return _require_finite(complex(z) * asmatrix(a), "scaled matrix")


def is_unitary(a, tol: float = 1e-12) -> bool:
    a = _require_square(a)
    return max_norm(dagger(a) @ a - np.eye(a.shape[0])) <= tol


def is_hermitian(a, tol: float = 1e-12) -> bool:
    a = _require_square(a)
    return max_norm(a - dagger(a)) <= tol


def is_anti_hermitian(a, tol: float = 1e-12) -> bool:
    a = _require_square(a)
    return max_norm(a + dagger(a)) <= tol


def is_normal(a, tol: float = 1e-12) -> bool:
    a = _require_square(a)
    scale_ = max(1.0, max_norm(a)) ** 2
    return max_norm(a @ dagger(a) - dagger(a) @ a) <= tol * scale_


def expm(a) -> np.ndarray:
    """Matrix exponential.

    Normal matrices (the only kind the algebraic layer produces:
    Hermitian boost generators, anti-Hermitian rotations) go through an
    eigendecomposition; anything else falls back to scaling-and-squaring.

    Raises
    ------
    NumericalError
        If the exponential overflows to non-finite entries.
    """
    a = _require_square(a)
    _require_finite(a, "expm argument")
    if is_hermitian(a, 1e-13 * max(1.0, max_norm(a))):
        h = 0.5 * (a + dagger(a))
        w, v = np.linalg.eigh(h)
        if np.max(w) > 700.0:
            raise NumericalError("matrix exponential overflow")
        out = (v * np.exp(w)) @ dagger(v)
    elif is_anti_hermitian(a, 1e-13 * max(1.0, max_norm(a))):
        h = -0.5j * (a - dagger(a))  # a = i h with h Hermitian
        w, v = np.linalg.eigh(h)
        out = (v * np.exp(1j * w)) @ dagger(v)
    elif is_normal(a):
        t, z = scipy.linalg.schur(a, output="complex")
        out = (z * np.exp(np.diag(t))) @ dagger(z)
    else:
        out = scipy.linalg.expm(a)
    return _require_finite(out, "matrix exponential")


def matrix_to_json(a) -> dict:
    """Serialize to the interchange form {rows, cols, re, im} (row-major)."""
    a = asmatrix(a)

    def clean(x):
        x = float(x)
        return x if x != 0.0 else 0.0  # normalize -0.0

    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "re": [clean(v) for v in a.real.ravel()],
        "im": [clean(v) for v in a.imag.ravel()],
    }


def matrix_from_json(obj) -> np.ndarray:
    """Parse the {rows, cols, re, im} interchange form."""
    if not isinstance(obj, dict):
        raise UsageError("matrix JSON must be an object")
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re, im = obj["re"], obj["im"]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed matrix JSON: {exc}") from exc
    if rows <= 0 or cols <= 0:
        raise UsageError("matrix dimensions must be positive")
    if len(re) != rows * cols or len(im) != rows * cols:
        raise UsageError("matrix JSON re/im length does not match rows*cols")
    a = (np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float)).reshape(rows, cols)
    if not np.all(np.isfinite(a)):
        raise UsageError("matrix JSON contains non-finite entries")
    return a
