"""Named gamma-matrix representations and charge conjugation.

Three representations are built in per signature: ``dirac``, ``weyl``,
and ``majorana``, in both D4 (3+1) and D2 (1+1).  Physically equivalent
representations are related by unitary similarity transforms
``gamma' = S gamma S^{-1}``; each built-in stores the matrix ``S`` that
takes it to the majorana-named representation of its signature.

Charge conjugation maps a wave function to ``psi_C = S_C psi*``.  The
matrix ``S_C`` is pinned (phase and all) by

    S_C = S^dagger S*,

where ``S`` is the stored transform to the majorana representation, in
which ``S_C`` is the identity and every gamma matrix is purely
imaginary.  ``S_C`` is unitary, satisfies ``S_C^{-1} = S_C^*``, and
obeys the defining relation ``S_C (-gamma^mu)* S_C^{-1} = gamma^mu``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import (
    ID2,
    SX,
    SY,
    SZ,
    UsageError,
    NumericalError,
    asmatrix,
    dagger,
    is_unitary,
    kron,
    max_norm,
)
from .clifford import (
    GammaSet,
    chirality,
    clifford_residual,
    hermiticity_residual,
    unitarity_residual,
)

BUILTIN_NAMES = ("dirac", "weyl", "majorana")
_VALIDATE_TOL = 1e-10


@dataclass(frozen=True)
class RepSpec:
    """A representation: gamma set plus its charge-conjugation data.

    Attributes
    ----------
    name : str
        Registry name, or a caller-chosen label for custom reps.
    gamma_set : GammaSet
        The gamma matrices and signature tag.
    s_to_majorana : ndarray or None
        Unitary matrix carrying this representation to the majorana one;
        None for custom representations assembled from an explicit S_C.
    s_c : ndarray
        Charge-conjugation matrix; derived as ``S^dagger S*`` whenever
        the majorana transform is known.
    """

    name: str
    gamma_set: GammaSet
    s_to_majorana: np.ndarray | None
    s_c: np.ndarray

    @property
    def dim(self) -> str:
        return self.gamma_set.dim

    @property
    def size(self) -> int:
        return self.gamma_set.size

    @property
    def gammas(self) -> tuple:
        return self.gamma_set.gammas

    @property
    def beta(self) -> np.ndarray:
        return self.gamma_set.beta

    @property
    def alpha(self) -> tuple:
        return self.gamma_set.alpha

    @property
    def chirality(self) -> np.ndarray:
        return chirality(self.gamma_set)


def derive_sc(s_to_majorana) -> np.ndarray:
    """Charge-conjugation matrix S_C = S^dagger S* from the transform to
    the majorana representation."""
    s = asmatrix(s_to_majorana)
    return dagger(s) @ s.conj()


def transport_sc(s_c, s) -> np.ndarray:
    """Carry a charge-conjugation matrix across the similarity transform
    ``S``: S_C' = S S_C (S*)^{-1}."""
    s_c, s = asmatrix(s_c), asmatrix(s)
    if s_c.shape != s.shape:
        raise UsageError(f"shape mismatch: S_C {s_c.shape} vs S {s.shape}")
    return s @ s_c @ np.linalg.inv(s.conj())


def verify_cc_defining(s_c, gset: GammaSet) -> float:
    """Max-norm defect of S_C (-gamma^mu)* S_C^{-1} = gamma^mu."""
    return _cc_defining_worst(s_c, gset)[1]


def _cc_defining_worst(s_c, gset: GammaSet):
    s_c = asmatrix(s_c)
    if s_c.shape != (gset.size, gset.size):
        raise UsageError(f"S_C shape {s_c.shape} does not match {gset.size}x{gset.size} gammas")
    try:
        inv = np.linalg.inv(s_c)
    except np.linalg.LinAlgError as exc:
        raise UsageError("S_C is singular") from exc
    worst, idx = -1.0, 0
    for mu, g in enumerate(gset.gammas):
        r = max_norm(s_c @ (-g).conj() @ inv - g)
        if r > worst:
            worst, idx = r, mu
    return idx, worst


def validate_rep(rep: RepSpec, tol: float = _VALIDATE_TOL) -> dict:
    """All structural residuals of a representation; raises none."""
    out = {
        "clifford": clifford_residual(rep.gamma_set),
        "hermiticity_relation": hermiticity_residual(rep.gamma_set),
        "unitarity": unitarity_residual(rep.gamma_set),
        "s_c_unitary": max_norm(dagger(rep.s_c) @ rep.s_c - np.eye(rep.size)),
        "s_c_inverse_conjugate": max_norm(rep.s_c @ rep.s_c.conj() - np.eye(rep.size)),
        "cc_defining": verify_cc_defining(rep.s_c, rep.gamma_set),
    }
    if rep.s_to_majorana is not None:
        out["s_to_majorana_unitary"] = max_norm(
            dagger(rep.s_to_majorana) @ rep.s_to_majorana - np.eye(rep.size)
        )
    return out


def _make_rep(name: str, dim: str, alphas, beta, s_to_majorana) -> RepSpec:
    beta = asmatrix(beta)
    gammas = (beta,) + tuple(beta @ asmatrix(a) for a in alphas)
    gset = GammaSet(dim, gammas)
    rep = RepSpec(name, gset, asmatrix(s_to_majorana), derive_sc(s_to_majorana))
    bad = {k: v for k, v in validate_rep(rep).items() if v > _VALIDATE_TOL}
    if bad:
        raise NumericalError(f"representation {name!r} fails invariants: {bad}")
    return rep


_SQ2 = np.sqrt(2.0)

# Similarity transforms into the majorana representation.
S_DIRAC_TO_MAJORANA_D4 = (kron(SX, SY) + kron(SZ, ID2)) / _SQ2
S_WEYL_TO_MAJORANA_D4 = (kron(SX, SY) + kron(SZ, SY) + kron(SZ, ID2) - kron(SX, ID2)) / 2.0
S_DIRAC_TO_WEYL_D4 = (kron(ID2, ID2) + 1j * kron(SY, ID2)) / _SQ2
S_DIRAC_TO_MAJORANA_D2 = (ID2 + 1j * SX) / _SQ2
S_WEYL_TO_MAJORANA_D2 = (1j * ID2 + SX + SY + SZ) / 2.0
S_DIRAC_TO_WEYL_D2 = (SX + SZ) / _SQ2


def _build_registry() -> dict:
    reg = {}
    reg[("dirac", "D4")] = _make_rep(
        "dirac", "D4",
        [kron(SX, s) for s in (SX, SY, SZ)],
        kron(SZ, ID2),
        S_DIRAC_TO_MAJORANA_D4,
    )
    reg[("weyl", "D4")] = _make_rep(
        "weyl", "D4",
        [kron(SZ, s) for s in (SX, SY, SZ)],
        -kron(SX, ID2),
        S_WEYL_TO_MAJORANA_D4,
    )
    reg[("majorana", "D4")] = _make_rep(
        "majorana", "D4",
        [-kron(SX, SX), kron(SZ, ID2), -kron(SX, SZ)],
        kron(SX, SY),
        np.eye(4, dtype=complex),
    )
    reg[("dirac", "D2")] = _make_rep("dirac", "D2", [SX], SZ, S_DIRAC_TO_MAJORANA_D2)
    reg[("weyl", "D2")] = _make_rep("weyl", "D2", [SZ], SX, S_WEYL_TO_MAJORANA_D2)
    reg[("majorana", "D2")] = _make_rep("majorana", "D2", [SX], SY, np.eye(2, dtype=complex))
    return reg


_REGISTRY = _build_registry()


def builtin(name: str, dim: str) -> RepSpec:
    """Look up a built-in representation by name and signature tag."""
    key = (str(name).lower(), str(dim).upper())
    if key not in _REGISTRY:
        raise UsageError(
            f"unknown representation {name!r}/{dim!r}; "
            f"names: {BUILTIN_NAMES}, dims: ('D2', 'D4')"
        )
    return _REGISTRY[key]


def all_builtins() -> tuple:
    return tuple(_REGISTRY.values())


def similarity_transform(rep: RepSpec, s, name: str = "custom") -> RepSpec:
    """New representation with gamma' = S gamma S^{-1}.

    ``S`` must be unitary to 1e-10.  The transform to the majorana
    representation composes as S_maj' = S_maj S^{-1}, and the
    charge-conjugation matrix is transported consistently (equals the
    rederived S^dagger S* for unitary S).
    """
    s = asmatrix(s)
    if s.shape != (rep.size, rep.size):
        raise UsageError(f"S shape {s.shape} does not match representation size {rep.size}")
    if not is_unitary(s, 1e-10):
        raise UsageError("similarity matrix must be unitary to 1e-10")
    s_inv = np.linalg.inv(s)
    gset = GammaSet(rep.dim, tuple(s @ g @ s_inv for g in rep.gammas))
    s_maj = None if rep.s_to_majorana is None else rep.s_to_majorana @ s_inv
    new = RepSpec(name, gset, s_maj, transport_sc(rep.s_c, s))
    bad = {k: v for k, v in validate_rep(new).items() if v > _VALIDATE_TOL}
    if bad:
        raise NumericalError(f"transformed representation fails invariants: {bad}")
    return new


def custom_rep(name: str, gset: GammaSet, s_to_majorana=None, s_c=None) -> RepSpec:
    """Assemble a representation from explicit data.

    Exactly one completion route is required: either the similarity
    matrix to the majorana representation (from which S_C is derived) or
    the charge-conjugation matrix itself.  No search is ever attempted.
    """
    if s_to_majorana is not None:
        s = asmatrix(s_to_majorana)
        rep = RepSpec(name, gset, s, derive_sc(s))
    elif s_c is not None:
        rep = RepSpec(name, gset, None, asmatrix(s_c))
    else:
        raise UsageError("custom representations must supply s_to_majorana or s_c")
    bad = {k: v for k, v in validate_rep(rep).items() if v > _VALIDATE_TOL}
    if bad:
        raise NumericalError(f"custom representation fails invariants: {bad}")
    return rep


def rep_change_matrix(rep_from: RepSpec, rep_to: RepSpec) -> np.ndarray:
    """Unitary U with psi_to = U psi_from and gamma_to = U gamma_from U^{-1}."""
    if rep_from.dim != rep_to.dim:
        raise UsageError("representations live in different signatures")
    if rep_from.s_to_majorana is None or rep_to.s_to_majorana is None:
        raise UsageError("representation change needs the majorana transform on both sides")
    return dagger(rep_to.s_to_majorana) @ rep_from.s_to_majorana


def charge_conjugate(rep: RepSpec, psi) -> np.ndarray:
    """psi_C = S_C psi*, applied along the last axis (spinor components).

    Involutive: applying it twice returns the input.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape[-1] != rep.size:
        raise UsageError(f"spinor has {psi.shape[-1]} components, representation needs {rep.size}")
    return np.einsum("ab,...b->...a", rep.s_c, psi.conj())


# --- named fixtures for cross-checking other common conventions ---------


def weyl_alternative(which: str) -> RepSpec:
    """Alternate chiral conventions seen in the literature, as custom reps.

    ``"beta_plus"``: alpha' = +sigma_z x sigma, beta' = +sigma_x x 1
    (related to the built-in weyl/D4 by S = sigma_z x 1).
    ``"alpha_minus"``: alpha' = -sigma_z x sigma, beta' = +sigma_x x 1
    (related by S = sigma_y x 1).
    """
    base = builtin("weyl", "D4")
    if which == "beta_plus":
        s = kron(SZ, ID2)
    elif which == "alpha_minus":
        s = kron(SY, ID2)
    else:
        raise UsageError(f"unknown weyl variant {which!r}")
    return similarity_transform(base, s, name=f"weyl_{which}")


def majorana_historical() -> RepSpec:
    """The original 1937 purely imaginary matrices: conjugating the
    built-in majorana/D4 set by sigma_z x 1 flips the sign of alpha_1,
    alpha_3, and beta while fixing alpha_2."""
    return similarity_transform(builtin("majorana", "D4"), kron(SZ, ID2), name="majorana_1937")


def common_sc_variants(rep: RepSpec) -> dict:
    """Other charge-conjugation phase conventions in circulation, keyed
    by their expression in terms of gamma^2 (D4 only).  Each satisfies
    the defining relation; none is used internally."""
    if rep.dim != "D4":
        raise UsageError("gamma^2-based variants exist only in D4")
    g2 = rep.gammas[2]
    return {
        "minus_gamma2": -g2,
        "plus_gamma2": g2,
        "plus_i_gamma2": 1j * g2,
        "minus_i_gamma2": -1j * g2,
    }
