"""Command-line entry point.

Subcommands: verify, tables, derive-sc, boost, box-evolve, box-modes.
Reports are JSON with a schema_version field; exit codes are 0 (all
checks passed), 1 (an identity check failed its tolerance), 2 (usage or
malformed input).  Output is deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import boxsim
from .fields import read_field_csv
from .matcore import NumericalError, UsageError, matrix_from_json, matrix_to_json, max_norm
from .clifford import (
    GammaSet,
    chirality_residuals,
    clifford_worst_pair,
    hermiticity_residual,
    unitarity_residual,
)
from .majorana import chiral_projectors, majorana_project, sector_matrices
from .boost import BoostParam, boost_covariance_report, intertwine_residual, spinor_boost, vector_boost
from .reps import (
    BUILTIN_NAMES,
    all_builtins,
    builtin,
    custom_rep,
    derive_sc,
    verify_cc_defining,
    _cc_defining_worst,
)

SCHEMA_VERSION = 1
DEFAULT_TOL = 1e-12


def _emit(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _check(name, target, residual, tol, **detail):
    entry = {
        "name": name,
        "target": target,
        "residual": float(residual),
        "tolerance": float(tol),
        "passed": bool(residual <= tol),
    }
    if detail:
        entry["detail"] = detail
    return entry


def _verify_rep_checks(rep, tol, label=None):
    label = label or f"{rep.name}/{rep.dim}"
    checks = []
    pair, cliff = clifford_worst_pair(rep.gamma_set)
    checks.append(_check("clifford_anticommutation", label, cliff, tol,
                         worst_pair=[int(pair[0]), int(pair[1])]))
    checks.append(_check("hermiticity_relation", label,
                         hermiticity_residual(rep.gamma_set), tol))
    checks.append(_check("unitarity", label, unitarity_residual(rep.gamma_set), tol))
    chi = chirality_residuals(rep.gamma_set)
    checks.append(_check("chirality_square", label, chi["square"], tol))
    checks.append(_check("chirality_anticommute", label, chi["anticommute"], tol))
    checks.append(_check("chirality_hermitian", label, chi["hermitian"], tol))
    mu, cc = _cc_defining_worst(rep.s_c, rep.gamma_set)
    checks.append(_check("cc_defining_relation", label, cc, tol, worst_gamma=int(mu)))
    checks.append(_check("cc_inverse_is_conjugate", label,
                         max_norm(rep.s_c @ rep.s_c.conj() - np.eye(rep.size)), tol))
    if rep.s_to_majorana is not None:
        checks.append(_check("cc_matches_derivation", label,
                             max_norm(rep.s_c - derive_sc(rep.s_to_majorana)), tol))
    if rep.name == "majorana":
        reality = max(max_norm(g.real) for g in rep.gammas)
        checks.append(_check("gamma_purely_imaginary", label, reality, tol))
        checks.append(_check("cc_matrix_is_identity", label,
                             max_norm(rep.s_c - np.eye(rep.size)), tol))
    return checks


def cmd_verify(args) -> int:
    tol = args.tol
    checks = []
    if args.rep_file:
        with open(args.rep_file) as fh:
            gset = GammaSet.from_json(json.load(fh))
        s = sc = None
        if args.s_file:
            with open(args.s_file) as fh:
                s = matrix_from_json(json.load(fh))
        if args.sc_file:
            with open(args.sc_file) as fh:
                sc = matrix_from_json(json.load(fh))
        if s is None and sc is None:
            # algebra-only checks; charge conjugation needs S or S_C
            label = "custom"
            pair, cliff = clifford_worst_pair(gset)
            checks.append(_check("clifford_anticommutation", label, cliff, tol,
                                 worst_pair=[int(pair[0]), int(pair[1])]))
            checks.append(_check("hermiticity_relation", label, hermiticity_residual(gset), tol))
            checks.append(_check("unitarity", label, unitarity_residual(gset), tol))
            chi = chirality_residuals(gset)
            checks.append(_check("chirality_square", label, chi["square"], tol))
            checks.append(_check("chirality_anticommute", label, chi["anticommute"], tol))
        else:
            try:
                rep = custom_rep("custom", gset, s_to_majorana=s, s_c=sc)
            except NumericalError as exc:
                # report the failure instead of raising: verification output
                pair, cliff = clifford_worst_pair(gset)
                checks.append(_check("clifford_anticommutation", "custom", cliff, tol,
                                     worst_pair=[int(pair[0]), int(pair[1])]))
                checks.append(_check("hermiticity_relation", "custom",
                                     hermiticity_residual(gset), tol))
                checks.append(_check("unitarity", "custom", unitarity_residual(gset), tol))
                if sc is not None:
                    checks.append(_check("cc_defining_relation", "custom",
                                         verify_cc_defining(sc, gset), tol))
                report = {
                    "schema_version": SCHEMA_VERSION,
                    "command": "verify",
                    "status": "fail",
                    "error": str(exc),
                    "checks": checks,
                }
                _emit(report, args.out)
                return 1
            checks.extend(_verify_rep_checks(rep, tol, label="custom"))
    elif args.all or args.rep is None:
        for rep in all_builtins():
            checks.extend(_verify_rep_checks(rep, tol))
    else:
        checks.extend(_verify_rep_checks(builtin(args.rep, args.dim), tol))
    status = "pass" if all(c["passed"] for c in checks) else "fail"
    _emit({"schema_version": SCHEMA_VERSION, "command": "verify",
           "status": status, "checks": checks}, args.out)
    return 0 if status == "pass" else 1


def _tables_payload() -> dict:
    d4 = {name: builtin(name, "D4") for name in BUILTIN_NAMES}
    d2 = {name: builtin(name, "D2") for name in BUILTIN_NAMES}

    def repblock_d4(rep):
        return {
            "alpha": [matrix_to_json(a) for a in rep.alpha],
            "beta": matrix_to_json(rep.beta),
            "gamma": [matrix_to_json(g) for g in rep.gammas[1:]],
            "chirality": matrix_to_json(rep.chirality),
            "S_C": matrix_to_json(rep.s_c),
        }

    def repblock_d2(rep):
        return {
            "alpha": matrix_to_json(rep.alpha[0]),
            "beta": matrix_to_json(rep.beta),
            "gamma1": matrix_to_json(rep.gammas[1]),
            "chirality": matrix_to_json(rep.chirality),
            "S_C": matrix_to_json(rep.s_c),
        }

    def projectors(rep):
        p_plus, p_minus = chiral_projectors(rep)
        return {"projector_plus": matrix_to_json(p_plus),
                "projector_minus": matrix_to_json(p_minus)}

    payload = {
        "schema_version": SCHEMA_VERSION,
        "note": (
            "chiral-component columns are represented by the projector "
            "matrices that produce them"
        ),
        "representations_3p1": {n: repblock_d4(r) for n, r in d4.items()},
        "majorana_alpha_3p1": [matrix_to_json(a) for a in d4["majorana"].alpha],
        "majorana_gamma_3p1": [matrix_to_json(g) for g in d4["majorana"].gammas[1:]],
        "representations_1p1": {n: repblock_d2(r) for n, r in d2.items()},
        "chiral_split_3p1": {n: projectors(r) for n, r in d4.items()},
        "sector_gamma_3p1": {},
        "sector_lambda_3p1": {},
        "chiral_split_1p1": {},
    }
    for n, r in d4.items():
        sm = sector_matrices(r)
        payload["sector_gamma_3p1"][n] = [matrix_to_json(g) for g in sm.capital_gamma]
        payload["sector_lambda_3p1"][n] = [matrix_to_json(g) for g in sm.capital_lambda]
        if sm.eta is not None:
            payload["sector_eta_weyl_3p1"] = [matrix_to_json(g) for g in sm.eta]
            payload["sector_xi_weyl_3p1"] = [matrix_to_json(g) for g in sm.xi]
    for n, r in d2.items():
        sm = sector_matrices(r)
        payload["chiral_split_1p1"][n] = {
            **projectors(r),
            "gamma_plus": [matrix_to_json(g) for g in sm.gamma_plus],
            "gamma_minus": [matrix_to_json(g) for g in sm.gamma_minus],
        }
    return payload


def cmd_tables(args) -> int:
    _emit(_tables_payload(), args.out)
    return 0


def cmd_derive_sc(args) -> int:
    with open(args.s_file) as fh:
        s = matrix_from_json(json.load(fh))
    sc = derive_sc(s)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "derive-sc",
        "S_C": matrix_to_json(sc),
        "unitary_residual": max_norm(sc.conj().T @ sc - np.eye(sc.shape[0])),
        "inverse_conjugate_residual": max_norm(sc @ sc.conj() - np.eye(sc.shape[0])),
    }
    if args.rep_file:
        with open(args.rep_file) as fh:
            gset = GammaSet.from_json(json.load(fh))
        report["cc_defining_residual"] = verify_cc_defining(sc, gset)
    _emit(report, args.out)
    return 0


def cmd_boost(args) -> int:
    if str(args.dim).upper() != "D2":
        raise UsageError("boosts are available in D2 only")
    rep = builtin(args.rep, "D2")
    p = BoostParam(args.omega)
    tol = args.tol
    report = {"schema_version": SCHEMA_VERSION, "command": "boost",
              "rep": rep.name, "omega": args.omega, "check": args.check}
    checks = []
    if args.check == "vector":
        mat = vector_boost(p)
        report["matrix"] = matrix_to_json(mat)
        eta = np.diag([1.0, -1.0])
        checks.append(_check("metric_preserved", rep.name,
                             max_norm(mat.T @ eta @ mat - eta), tol))
    elif args.check == "spinor":
        mat = spinor_boost(rep, p)
        report["matrix"] = matrix_to_json(mat)
        checks.append(_check("determinant_one", rep.name,
                             abs(np.linalg.det(mat) - 1.0), 1e-10))
    elif args.check == "intertwine":
        checks.append(_check("intertwine", rep.name, intertwine_residual(rep, p), 1e-10))
    else:  # covariance
        rng = np.random.default_rng(7)
        psi = majorana_project(rep, rng.normal(size=2) + 1j * rng.normal(size=2))
        rpt = boost_covariance_report(rep, p, psi)
        checks.append(_check("chiral_scaling", rep.name, rpt["chiral_scaling_residual"], tol))
        checks.append(_check("cc_commutes_with_boost", rep.name,
                             rpt["cc_commutation_residual"], tol))
        checks.append(_check("defect_invariant", rep.name,
                             abs(rpt["defect_after"] - rpt["defect_before"]), tol))
    report["checks"] = checks
    report["status"] = "pass" if all(c["passed"] for c in checks) else "fail"
    _emit(report, args.out)
    return 0 if report["status"] == "pass" else 1


def _parse_potential(spec: str):
    if spec is None:
        return 0.0
    if ":" not in spec:
        return float(spec)
    kind, _, rest = spec.partition(":")
    if kind == "const":
        return float(rest)
    if kind == "linear":
        try:
            a, b = (float(v) for v in rest.split(","))
        except ValueError as exc:
            raise UsageError("linear potential takes 'linear:a,b' for a + b*x") from exc
        return lambda x: a + b * x
    if kind == "file":
        with open(rest) as fh:
            return np.asarray(json.load(fh), dtype=float)
    raise UsageError(f"unknown potential spec {spec!r}")


def _parse_bc(args) -> boxsim.BoundaryCondition:
    fam = args.bc.lower().replace("-", "_")
    if fam == "family35":
        if args.m0 is None:
            raise UsageError("family35 requires --m0 (m2 = sqrt(1 - m0^2) unless given)")
        m0 = args.m0
        m2 = args.m2 if args.m2 is not None else float(np.sqrt(max(0.0, 1.0 - m0 * m0)))
        return boxsim.BoundaryCondition.family35(m0, m2)
    if fam == "family36":
        if args.m1 is None and args.m3 is None:
            raise UsageError("family36 requires --m1 or --m3")
        m3 = args.m3 if args.m3 is not None else float(np.sqrt(max(0.0, 1.0 - args.m1 ** 2)))
        m1 = args.m1 if args.m1 is not None else float(np.sqrt(max(0.0, 1.0 - m3 * m3)))
        return boxsim.BoundaryCondition.family36(m1, m3)
    if fam.startswith("confining"):
        return boxsim.BoundaryCondition.confining(int(fam.removeprefix("confining")))
    if fam == "dirac_confining":
        return boxsim.BoundaryCondition.dirac_confining(args.f, args.g)
    raise UsageError(f"unknown boundary condition {args.bc!r}")


def _build_hamiltonian(args):
    rep = builtin(args.rep, "D2")
    grid = boxsim.Grid1D(args.L, args.N)
    bc = _parse_bc(args)
    v = _parse_potential(args.potential)
    return boxsim.assemble_hamiltonian(rep, grid, v, args.mass, bc), grid, rep


def _parse_initial(args, grid, rep):
    if args.initial.startswith("gaussian"):
        if ":" in args.initial:
            parts = args.initial.partition(":")[2].split(",")
            center, width = float(parts[0]), float(parts[1])
            k0 = float(parts[2]) if len(parts) > 2 else 0.0
        else:
            center, width, k0 = 0.5 * grid.L, 0.1 * grid.L, 0.0
        psi0 = boxsim.gaussian_packet(grid, center, width, k0)
    elif args.initial.startswith("file:"):
        # a field CSV; the final time slice becomes the initial state
        _, x, values = read_field_csv(args.initial.partition(":")[2])
        if len(x) != grid.N or np.max(np.abs(x - grid.nodes)) > 1e-9 * grid.L:
            raise UsageError("initial field CSV does not match the grid nodes")
        if values.shape[2] != 2:
            raise UsageError("initial field CSV must carry 2 components")
        psi0 = values[-1]
    else:
        raise UsageError(f"unknown initial state spec {args.initial!r}")
    if args.majorana_project:
        psi0 = majorana_project(rep, psi0)
        nrm = np.sqrt(np.sum(np.abs(psi0) ** 2) * grid.dx)
        psi0 = psi0 / nrm
    return psi0


def cmd_box_evolve(args) -> int:
    ham, grid, rep = _build_hamiltonian(args)
    psi0 = _parse_initial(args, grid, rep)
    states = boxsim.evolve(ham, psi0, args.dt, args.steps, record_every=args.record_every)
    if args.field_out:
        boxsim.states_to_txfield(grid, states).to_csv(args.field_out)
    header = ["step", "t", "norm", "defect", "j0", "jL"]
    if args.snapshots:
        for j in range(grid.N):
            header += [f"re_c0_x{j}", f"im_c0_x{j}", f"re_c1_x{j}", f"im_c1_x{j}"]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(header)
        for s in states:
            row = [s.step, repr(s.t), repr(s.norm), repr(s.defect), repr(s.j0), repr(s.jL)]
            if args.snapshots:
                for j in range(grid.N):
                    row += [repr(s.field[j, 0].real), repr(s.field[j, 0].imag),
                            repr(s.field[j, 1].real), repr(s.field[j, 1].imag)]
            writer.writerow(row)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_box_modes(args) -> int:
    ham, grid, _ = _build_hamiltonian(args)
    modes = boxsim.stationary_modes(ham, args.k)
    entries = []
    for e, fld in modes:
        vec = fld.reshape(-1)
        res = max_norm(ham.matrix @ vec - e * vec)
        entries.append({"energy": float(e), "residual": float(res)})
    _emit({"schema_version": SCHEMA_VERSION, "command": "box-modes",
           "rep": args.rep, "bc": args.bc, "k": args.k, "modes": entries}, args.out)
    return 0


def _add_ham_args(p):
    p.add_argument("--rep", default="weyl", help="representation name (D2)")
    p.add_argument("--bc", default="confining37",
                   help="family35 | family36 | confining37..40 | dirac-confining")
    p.add_argument("--m0", type=float, default=None)
    p.add_argument("--m2", type=float, default=None)
    p.add_argument("--m1", type=float, default=None)
    p.add_argument("--m3", type=float, default=None)
    p.add_argument("--f", default="im", help="dirac-confining wall function at x=0 (re|im)")
    p.add_argument("--g", default="im", help="dirac-confining wall function at x=L (re|im)")
    p.add_argument("--mass", type=float, default=1.0, help="rest energy (natural units)")
    p.add_argument("--potential", default="0.0",
                   help="VALUE | const:VALUE | linear:a,b | file:samples.json")
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--N", type=int, default=256)
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinorbox",
        description="gamma-matrix algebra checks and a 1D box simulator "
                    "for self-conjugate fermions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the algebraic identity suites")
    p.add_argument("--all", action="store_true", help="verify every built-in representation")
    p.add_argument("--rep", default=None, help="built-in representation name")
    p.add_argument("--dim", default="D4", help="D2 or D4")
    p.add_argument("--rep-file", default=None, help="gamma-set JSON for a custom representation")
    p.add_argument("--s-file", default=None, help="similarity-to-majorana matrix JSON")
    p.add_argument("--sc-file", default=None, help="charge-conjugation matrix JSON")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="emit the representation and sector tables as JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("derive-sc", help="derive a charge-conjugation matrix from S")
    p.add_argument("--s-file", required=True, help="matrix JSON of the transform to majorana form")
    p.add_argument("--rep-file", default=None, help="optional gamma-set JSON to verify against")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_derive_sc)

    p = sub.add_parser("boost", help="1+1 boost checks")
    p.add_argument("--rep", default="weyl")
    p.add_argument("--dim", default="D2", help="must be D2; no 3+1 boost exists here")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--check", choices=["vector", "spinor", "intertwine", "covariance"],
                   default="intertwine")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("box-evolve", help="Crank-Nicolson evolution in the box")
    _add_ham_args(p)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--record-every", type=int, default=1)
    p.add_argument("--initial", default="gaussian",
                   help="gaussian[:center,width[,k0]] | file:field.csv (last time slice)")
    p.add_argument("--majorana-project", action=argparse.BooleanOptionalAction, default=True,
                   help="project the initial state onto the self-conjugate sector")
    p.add_argument("--snapshots", action="store_true", help="append field columns to the CSV")
    p.add_argument("--field-out", default=None,
                   help="also write the recorded field as a (t, x) CSV")
    p.set_defaults(func=cmd_box_evolve)

    p = sub.add_parser("box-modes", help="lowest-|E| stationary modes of the box")
    _add_ham_args(p)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=cmd_box_modes)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
