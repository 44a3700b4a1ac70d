#!/usr/bin/env python3
"""Tour of the built-in gamma-matrix representations.

Prints, for each representation in both signatures: the defining-relation
residuals, the chirality matrix, and the charge-conjugation matrix with
its derivation check S_C = S^dagger S*.
"""

import numpy as np

import spinorbox as sb
from spinorbox.matcore import max_norm

np.set_printoptions(precision=3, suppress=True, linewidth=110)

for dim in ("D4", "D2"):
    print(f"=== {dim} ===")
    for name in sb.BUILTIN_NAMES:
        rep = sb.builtin(name, dim)
        residuals = sb.validate_rep(rep)
        print(f"\n{name}/{dim}")
        print(f"  anticommutation residual : {residuals['clifford']:.2e}")
        print(f"  hermiticity relation     : {residuals['hermiticity_relation']:.2e}")
        print(f"  unitarity                : {residuals['unitarity']:.2e}")
        print(f"  conjugation defining rel : {residuals['cc_defining']:.2e}")
        print(f"  chirality matrix:\n{np.array_str(rep.chirality)}")
        print(f"  S_C:\n{np.array_str(rep.s_c)}")
        derived = sb.derive_sc(rep.s_to_majorana)
        print(f"  ||S_C - S^dag S*||       : {max_norm(rep.s_c - derived):.2e}")
        if name == "majorana":
            print(f"  max |Re gamma|           : {max(max_norm(g.real) for g in rep.gammas):.1e}")

print("\nSimilarity chain: moving the dirac set with the explicit transforms")
from spinorbox.reps import S_DIRAC_TO_WEYL_D4  # noqa: E402

moved = sb.similarity_transform(sb.builtin("dirac", "D4"), S_DIRAC_TO_WEYL_D4)
target = sb.builtin("weyl", "D4")
drift = max(max_norm(a - b) for a, b in zip(moved.gammas, target.gammas))
print(f"dirac -> weyl gamma drift: {drift:.2e}")
print(f"transported S_C drift    : {max_norm(moved.s_c - target.s_c):.2e}")
