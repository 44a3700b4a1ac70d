#!/usr/bin/env python3
"""One-dimensional self-conjugate fermion in a box.

Assembles the Hamiltonian under a confining wall condition, evolves a
self-conjugate wave packet with Crank-Nicolson, and prints the conserved
quantities; then extracts the lowest stationary modes, including the
zero-energy wall mode hosted by the same-ratio families.
"""

import numpy as np

import spinorbox as sb
from spinorbox.boxsim import BoundaryCondition

rep = sb.builtin("weyl", "D2")
grid = sb.Grid1D(1.0, 128)
mass, v0 = 2.0, 0.5
bc = BoundaryCondition.confining(37)

ham = sb.assemble_hamiltonian(rep, grid, v0, mass, bc)
print(f"Hamiltonian: {ham.matrix.shape[0]}x{ham.matrix.shape[1]}, "
      f"hermiticity residual {ham.hermiticity_residual:.1e}")

psi0 = sb.majorana_project(rep, sb.gaussian_packet(grid, 0.5, 0.08))
psi0 /= np.sqrt(np.sum(np.abs(psi0) ** 2) * grid.dx)
states = sb.evolve(ham, psi0, dt=1e-3, steps=600, record_every=100)

print(f"\n{'step':>6} {'t':>8} {'norm':>18} {'defect':>10} {'j(0)':>10} {'j(L)':>10}")
for s in states:
    print(f"{s.step:>6} {s.t:>8.4f} {s.norm:>18.15f} {s.defect:>10.2e} "
          f"{s.j0:>10.2e} {s.jL:>10.2e}")

print("\nlowest stationary modes (same-ratio walls host a zero mode):")
for e, _ in sb.stationary_modes(ham, 5):
    print(f"  E = {e:+.6f}")

bc_mixed = BoundaryCondition.confining(40)
ham40 = sb.assemble_hamiltonian(rep, grid, 0.0, mass, bc_mixed)
print("\nmixed-ratio walls are gapped above the rest energy:")
for e, _ in sb.stationary_modes(ham40, 5):
    print(f"  E = {e:+.6f}   (|E| > m = {mass})")

# the two linking families are available for inspection but carry wall
# current, so the dynamic operations refuse them
linking = BoundaryCondition.family35(0.6, 0.8)
print("\nfamily35(0.6, 0.8) consistency:", sb.bc_consistency_check(linking))
