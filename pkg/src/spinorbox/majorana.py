"""Self-conjugate (Majorana-type) wave functions and chiral structure.

The defining condition is psi = psi_C = S_C psi*.  Imposed on a wave
function it halves the real degrees of freedom; in the majorana
representation it is plain realness, in the dirac and weyl D4
representations it determines one two-component half from the other,
and in the weyl D2 representation it phase-locks each component
individually.

The chiral split psi = psi_+ + psi_- uses the projectors
P_+- = (1 +- chi)/2 built from the chirality matrix chi of the
representation.  Combining the split with the self-conjugacy condition
closes the first-order equation on a single chiral sector; the sector
matrices produced here are

    Gamma^mu  = (S_C)* P_- gamma^mu     (D4, plus-sector equation)
    Lambda^mu = (S_C)* P_+ gamma^mu     (D4, minus-sector equation)
    gamma_+-^mu = P_+- gamma^mu         (D2, coupled pair)

plus, in the weyl D4 representation only, the 2x2 blocks eta^mu / xi^mu
that drive the two-component equations for the upper / lower halves.

Residual evaluators act on :class:`~spinorbox.fields.TXField` samples
with second-order central differences; fields are assumed uniform along
any transverse directions, so only gamma^0 and gamma^1 differentiate.
Grid boundary rows are excluded from every max-norm.  Natural units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matcore import ID2, SX, SY, UsageError, max_norm
from .clifford import _w_samples, chirality
from .fields import TXField
from .reps import RepSpec, charge_conjugate

# re-exported interchange helpers: the (t, x) CSV format lives in fields
from .fields import TXField as SpinorField  # noqa: F401  (alias for consumers)


def majorana_defect(rep: RepSpec, psi) -> float:
    """Max-norm of psi - S_C psi*; zero iff psi is self-conjugate."""
    psi = np.asarray(psi, dtype=complex)
    return max_norm(psi - charge_conjugate(rep, psi))


def majorana_project(rep: RepSpec, psi) -> np.ndarray:
    """Nearest self-conjugate field: (psi + S_C psi*)/2."""
    psi = np.asarray(psi, dtype=complex)
    return 0.5 * (psi + charge_conjugate(rep, psi))


def complete_from_component(rep: RepSpec, part, which: str) -> np.ndarray:
    """Build a full self-conjugate spinor from one half.

    Works whenever S_C is block-off-diagonal (dirac/D4, weyl/D4,
    dirac/D2), in which case psi = [top; bottom] with

        top = B bottom*,   bottom = B' top*,

    where B and B' are the off-diagonal blocks of S_C.  For
    representations whose S_C is block-diagonal (weyl/D2 and the
    majorana ones) the condition constrains each component individually
    and no completion exists.
    """
    part = np.asarray(part, dtype=complex)
    h = rep.size // 2
    if part.shape != (h,):
        raise UsageError(f"component half must have {h} entries, got {part.shape}")
    if which not in ("upper", "lower"):
        raise UsageError("which must be 'upper' or 'lower'")
    sc = rep.s_c
    b_ur, b_ll = sc[:h, h:], sc[h:, :h]
    if max(max_norm(sc[:h, :h]), max_norm(sc[h:, h:])) > 1e-12:
        raise UsageError(
            f"representation {rep.name!r}/{rep.dim} does not determine one half "
            "from the other (its self-conjugacy condition is componentwise)"
        )
    if which == "upper":
        full = np.concatenate([part, b_ll @ part.conj()])
    else:
        full = np.concatenate([b_ur @ part.conj(), part])
    return full


@dataclass(frozen=True)
class ChiralDecomposition:
    psi_plus: np.ndarray
    psi_minus: np.ndarray
    projector_plus: np.ndarray
    projector_minus: np.ndarray
    gamma_plus: tuple
    gamma_minus: tuple


def chiral_projectors(rep: RepSpec):
    chi = rep.chirality
    eye = np.eye(rep.size)
    return 0.5 * (eye + chi), 0.5 * (eye - chi)


def chiral_decompose(rep: RepSpec, psi) -> ChiralDecomposition:
    """Split psi into chirality eigenparts, with the sector gammas
    gamma_+-^mu = P_+- gamma^mu."""
    psi = np.asarray(psi, dtype=complex)
    p_plus, p_minus = chiral_projectors(rep)
    return ChiralDecomposition(
        psi_plus=np.einsum("ab,...b->...a", p_plus, psi),
        psi_minus=np.einsum("ab,...b->...a", p_minus, psi),
        projector_plus=p_plus,
        projector_minus=p_minus,
        gamma_plus=tuple(p_plus @ g for g in rep.gammas),
        gamma_minus=tuple(p_minus @ g for g in rep.gammas),
    )


def cc_chirality_relation(rep: RepSpec, psi) -> dict:
    """How charge conjugation pairs with the chiral split.

    In D4 conjugation swaps the sectors, (psi_+-)_C = (psi_C)_-+; in D2
    it preserves them, (psi_+-)_C = (psi_C)_+-.  Returns the pairing and
    the max discrepancy of the identity on the given spinor.
    """
    dec = chiral_decompose(rep, psi)
    psi_c = charge_conjugate(rep, np.asarray(psi, dtype=complex))
    dec_c = chiral_decompose(rep, psi_c)
    if rep.dim == "D4":
        pairing = "swapped"
        d = max(
            max_norm(charge_conjugate(rep, dec.psi_plus) - dec_c.psi_minus),
            max_norm(charge_conjugate(rep, dec.psi_minus) - dec_c.psi_plus),
        )
    else:
        pairing = "same"
        d = max(
            max_norm(charge_conjugate(rep, dec.psi_plus) - dec_c.psi_plus),
            max_norm(charge_conjugate(rep, dec.psi_minus) - dec_c.psi_minus),
        )
    return {"pairing": pairing, "discrepancy": d}


@dataclass(frozen=True)
class SectorMatrices:
    """Sector matrices of the chiral-projection procedure.

    D4 fills ``capital_gamma``/``capital_lambda`` (and ``eta``/``xi``
    for the weyl representation); D2 fills ``gamma_plus``/``gamma_minus``.
    """

    gamma_plus: tuple
    gamma_minus: tuple
    capital_gamma: Optional[tuple] = None
    capital_lambda: Optional[tuple] = None
    eta: Optional[tuple] = None
    xi: Optional[tuple] = None


def sector_matrices(rep: RepSpec) -> SectorMatrices:
    p_plus, p_minus = chiral_projectors(rep)
    gplus = tuple(p_plus @ g for g in rep.gammas)
    gminus = tuple(p_minus @ g for g in rep.gammas)
    if rep.dim == "D2":
        return SectorMatrices(gamma_plus=gplus, gamma_minus=gminus)
    scc = rep.s_c.conj()
    cap_gamma = tuple(scc @ g for g in gminus)
    cap_lambda = tuple(scc @ g for g in gplus)
    eta = xi = None
    if rep.name == "weyl":
        # in the weyl representation the sector equations close on 2x2 blocks
        eta = tuple(1j * g[:2, :2] for g in cap_gamma)
        xi = tuple(1j * g[2:, 2:] for g in cap_lambda)
    return SectorMatrices(
        gamma_plus=gplus,
        gamma_minus=gminus,
        capital_gamma=cap_gamma,
        capital_lambda=cap_lambda,
        eta=eta,
        xi=xi,
    )


# --- grid residual evaluators -------------------------------------------


def _interior(fld: TXField):
    """Central first derivatives and the matching interior window."""
    v = fld.values
    if v.shape[0] < 3 or v.shape[1] < 3:
        raise UsageError("grid too small: need at least 3 samples per dimension")
    d_t = (v[2:, 1:-1] - v[:-2, 1:-1]) / (2 * fld.dt)
    d_x = (v[1:-1, 2:] - v[1:-1, :-2]) / (2 * fld.dx)
    return v[1:-1, 1:-1], d_t, d_x


def _apply(m: np.ndarray, arr: np.ndarray) -> np.ndarray:
    return np.einsum("ab,knb->kna", m, arr)


def _check_components(rep: RepSpec, fld: TXField):
    if fld.ncomp != rep.size:
        raise UsageError(f"field has {fld.ncomp} components, representation needs {rep.size}")


def dirac_residual(rep: RepSpec, fld: TXField, V, m: float) -> float:
    """First-order residual i gamma^mu d_mu psi - W psi, W = V + m."""
    _check_components(rep, fld)
    w = _w_samples(V, m, fld.x)[1:-1]
    core, d_t, d_x = _interior(fld)
    g0, g1 = rep.gammas[0], rep.gammas[1]
    res = 1j * _apply(g0, d_t) + 1j * _apply(g1, d_x) - w[None, :, None] * core
    return max_norm(res)


def case_residual_plus(rep: RepSpec, fld: TXField, V, m: float) -> float:
    """Plus-sector residual of the chiral-projection equations.

    D4: i Gamma^mu d_mu psi_+ - W psi_+^*, with psi_+ projected from the
    given field.  D2: the sectors stay coupled, so the result is the max
    over the coupled pair

        i gamma_+^mu d_mu psi_-  - W psi_+ ,
        i gamma_-^mu d_mu psi_+  - W psi_- .
    """
    return _case_residual(rep, fld, V, m, plus=True)


def case_residual_minus(rep: RepSpec, fld: TXField, V, m: float) -> float:
    """Minus-sector mirror of :func:`case_residual_plus` (D4: Lambda^mu)."""
    return _case_residual(rep, fld, V, m, plus=False)


def _case_residual(rep: RepSpec, fld: TXField, V, m: float, plus: bool) -> float:
    _check_components(rep, fld)
    w = _w_samples(V, m, fld.x)[1:-1]
    core, d_t, d_x = _interior(fld)
    p_plus, p_minus = chiral_projectors(rep)
    sm = sector_matrices(rep)
    wcol = w[None, :, None]
    if rep.dim == "D2":
        plus_core = _apply(p_plus, core)
        minus_core = _apply(p_minus, core)
        r1 = (
            1j * _apply(sm.gamma_plus[0] @ p_minus, d_t)
            + 1j * _apply(sm.gamma_plus[1] @ p_minus, d_x)
            - wcol * plus_core
        )
        r2 = (
            1j * _apply(sm.gamma_minus[0] @ p_plus, d_t)
            + 1j * _apply(sm.gamma_minus[1] @ p_plus, d_x)
            - wcol * minus_core
        )
        return max(max_norm(r1), max_norm(r2))
    proj = p_plus if plus else p_minus
    mats = sm.capital_gamma if plus else sm.capital_lambda
    sector = _apply(proj, core)
    res = (
        1j * _apply(mats[0] @ proj, d_t)
        + 1j * _apply(mats[1] @ proj, d_x)
        - wcol * sector.conj()
    )
    return max_norm(res)


#: two-component equation variants: name -> (spatial sign, mass matrix).
#: The spatial sign +1 contracts with sigma^mu = (1, +sigma), -1 with
#: sigma-bar^mu = (1, -sigma).  The residual evaluated is
#: i Sigma^mu d_mu phi + W M phi*.  The phase_i pair uses the
#: i*gamma^2-style conjugation phase (see reps.common_sc_variants); the
#: alpha_minus pair is the same physics written in the flipped-chirality
#: convention of reps.weyl_alternative("alpha_minus").
TWO_COMPONENT_VARIANTS = {
    "right_chiral": (+1, SY),
    "left_chiral": (-1, -SY),
    "right_chiral_phase_i": (+1, 1j * SY),
    "left_chiral_phase_i": (-1, -1j * SY),
    "left_chiral_alpha_minus": (-1, 1j * SY),
    "right_chiral_alpha_minus": (+1, -1j * SY),
}


def two_component_residual(variant: str, fld: TXField, V, m: float) -> float:
    """Residual of a two-component self-conjugate-fermion equation.

    ``variant`` selects the convention (see
    :data:`TWO_COMPONENT_VARIANTS`); the primary pair is
    ``"right_chiral"``, i sigma^mu d_mu phi + W sigma_y phi* = 0, and
    ``"left_chiral"``, i sigma-bar^mu d_mu phi - W sigma_y phi* = 0.
    The field varies along one spatial axis.
    """
    try:
        sign, mass_mat = TWO_COMPONENT_VARIANTS[variant]
    except KeyError:
        raise UsageError(
            f"unknown variant {variant!r}; options: {sorted(TWO_COMPONENT_VARIANTS)}"
        ) from None
    if fld.ncomp != 2:
        raise UsageError("two-component residual needs a 2-component field")
    w = _w_samples(V, m, fld.x)[1:-1]
    core, d_t, d_x = _interior(fld)
    res = (
        1j * _apply(ID2, d_t)
        + 1j * sign * _apply(SX, d_x)
        + w[None, :, None] * _apply(mass_mat, core.conj())
    )
    return max_norm(res)


def majorana_equation_residual(rep: RepSpec, fld: TXField, V, m: float) -> float:
    """Residual of i gamma^mu d_mu psi - W psi_C.

    The conjugate-sourced first-order equation; for fields satisfying
    the self-conjugacy condition it coincides with the plain first-order
    residual, while unconstrained two-sided solutions probe the
    conjugate coupling itself.
    """
    _check_components(rep, fld)
    w = _w_samples(V, m, fld.x)[1:-1]
    core, d_t, d_x = _interior(fld)
    g0, g1 = rep.gammas[0], rep.gammas[1]
    psi_c = _apply(rep.s_c, core.conj())
    res = 1j * _apply(g0, d_t) + 1j * _apply(g1, d_x) - w[None, :, None] * psi_c
    return max_norm(res)
