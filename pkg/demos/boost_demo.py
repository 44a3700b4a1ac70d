#!/usr/bin/env python3
"""1+1 boost behavior: coordinate boosts, spinor boosts, intertwining,
and commutation with charge conjugation."""

import numpy as np

import spinorbox as sb
from spinorbox.boost import BoostParam

np.set_printoptions(precision=4, suppress=True)

for omega in (0.25, np.log(2.0), 2.0):
    p = BoostParam(omega)
    print(f"omega = {omega:.4f}: beta = {p.beta:.4f}, gamma = {p.lorentz_gamma:.4f}")
    print("coordinate boost:\n", sb.vector_boost(p))
    for name in sb.BUILTIN_NAMES:
        rep = sb.builtin(name, "D2")
        res = sb.intertwine_residual(rep, p)
        print(f"  {name:9s} intertwine residual {res:.1e}")
    weyl = sb.builtin("weyl", "D2")
    s = sb.spinor_boost(weyl, p)
    print(f"  weyl spinor boost diag: {np.diag(s).real} "
          f"(e^(-+omega/2) = {np.exp(-omega/2):.4f}, {np.exp(omega/2):.4f})")
    rng = np.random.default_rng(3)
    psi = sb.majorana_project(weyl, rng.normal(size=2) + 1j * rng.normal(size=2))
    rpt = sb.boost_covariance_report(weyl, p, psi)
    print(f"  conjugation commutes with boost to {rpt['cc_commutation_residual']:.1e}; "
          f"defect {rpt['defect_before']:.1e} -> {rpt['defect_after']:.1e}")
    print()
