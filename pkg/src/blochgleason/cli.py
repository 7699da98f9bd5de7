"""Command-line entry point.

Exit statuses: 0 success (or rule survives ``falsify``), 1 rule falsified,
2 usage or input error.
"""
import argparse
import sys

import numpy as np

from . import formats
from .basis import basis_labels, build_basis, verify_basis
from .geometry import (bloch_to_density, check_hermitian_unit_trace,
                       computational_measurement, density_to_bloch,
                       measurement_from_vectors, random_measurement)
from .gleason import cauchy_grid_solve, scan_face
from .matrix import min_eigenvalue
from .rules import born_probability, parse_outcome_function, rule_probability

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def cmd_basis(args):
    if args.dim is None or args.dim < 2:
        raise InputError("--dim must be an integer >= 2")
    basis = build_basis(args.dim)
    records = []
    for idx, (el, (kind, j, k)) in enumerate(zip(basis.elements, basis_labels(args.dim))):
        for row in range(args.dim):
            for col in range(args.dim):
                z = el[row, col]
                records.append({"index": idx, "kind": kind, "j": j, "k_or_ell": k,
                                "row": row, "col": col, "re": z.real, "im": z.imag})
    rep = verify_basis(basis)
    summary = {"dim": args.dim, "count": len(basis), "c": basis.c,
               "max_hermiticity_defect": rep.max_hermiticity_defect,
               "max_trace_defect": rep.max_trace_defect,
               "max_orthogonality_defect": rep.max_orthogonality_defect}
    return {"command": "basis", "summary": summary, "records": records}, EXIT_OK


def _load_state(path, dim):
    """Read a state file and return ``(basis, bloch_vector, matrix, kind)``."""
    if path is None:
        raise InputError("--in is required")
    try:
        kind, data = formats.read_state(path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    if kind == "matrix":
        n = data.shape[0]
        basis = build_basis(n)
        check_hermitian_unit_trace(data, 1e-10)
        matrix, r = data, density_to_bloch(data, basis)
    else:
        n = int(round(np.sqrt(data.size + 1)))
        basis = build_basis(n)
        r, matrix = data, bloch_to_density(data, basis)
    if dim is not None and dim != n:
        raise InputError(f"--dim {dim} does not match the file's dimension {n}")
    return basis, r, matrix, kind


def cmd_convert(args):
    basis, r, matrix, kind = _load_state(args.input, args.dim)
    lam = min_eigenvalue(matrix)
    valid = lam >= -args.tol
    if kind == "matrix":
        records = [{"component": i, "value": v} for i, v in enumerate(r)]
    else:
        records = [{"row": a, "col": b, "re": matrix[a, b].real, "im": matrix[a, b].imag}
                   for a in range(basis.dim) for b in range(basis.dim)]
    summary = {"dim": basis.dim, "input": kind,
               "output": "bloch" if kind == "matrix" else "matrix",
               "valid": bool(valid), "min_eigenvalue": lam,
               "purity": float(np.real(np.trace(matrix @ matrix))) if valid else None,
               "bloch_norm": float(np.linalg.norm(r))}
    return {"command": "convert", "summary": summary, "records": records}, EXIT_OK


def _measurement(spec, basis, seed):
    if spec == "computational":
        return computational_measurement(basis)
    if spec == "random":
        return random_measurement(basis, seed)
    try:
        kind, data = formats.read_state(spec)
    except OSError as exc:
        raise InputError(str(exc)) from None
    if kind != "matrix":
        raise InputError("measurement file must be an N x N matrix whose columns are the basis vectors")
    return measurement_from_vectors(data, basis)


def cmd_probs(args):
    basis, r, matrix, _ = _load_state(args.input, args.dim)
    if min_eigenvalue(matrix) < -args.tol:
        raise InputError("input does not describe a valid state (negative eigenvalue)")
    f = parse_outcome_function(args.f)
    m = _measurement(args.basis, basis, args.seed)
    records = []
    for i in range(1, basis.dim + 1):
        born = born_probability(r, m, i, basis)
        rule = rule_probability(f, r, m, i)
        records.append({"outcome": i, "born": born, "rule": rule, "difference": rule - born})
    summary = {"dim": basis.dim, "f": args.f, "measurement": args.basis,
               "born_sum": sum(rec["born"] for rec in records),
               "rule_sum": sum(rec["rule"] for rec in records)}
    return {"command": "probs", "summary": summary, "records": records}, EXIT_OK


def cmd_falsify(args):
    if args.dim is None:
        raise InputError("--dim is required")
    if args.dim < 3:
        raise InputError(f"dimension {args.dim} not subject to the constraint: "
                         "in dimension 2 any odd f with f(1)=1 is a valid rule, "
                         "so there is nothing to falsify")
    if args.grid < 2:
        raise InputError("--grid must be >= 2")
    f = parse_outcome_function(args.f)
    rep = scan_face(f, args.dim, args.grid)
    survived = rep.max_abs_residual <= args.tol
    summary = {"f": args.f, **rep.to_dict(), "tol": args.tol, "survived": survived}
    return ({"command": "falsify", "summary": summary, "records": []},
            EXIT_OK if survived else EXIT_FALSIFIED)


def cmd_cauchy(args):
    m = args.grid
    if m < 2:
        raise InputError("--grid must be >= 2 (insufficient constraints)")
    g = cauchy_grid_solve(m)
    records = []
    for k, v in zip(range(-m, m + 1), g):
        records.append({"k": k, "node": k / m, "value": v, "deviation": v - k / m})
    summary = {"grid": m, "max_deviation": max(abs(r["deviation"]) for r in records)}
    return {"command": "cauchy", "summary": summary, "records": records}, EXIT_OK


COMMANDS = {"basis": cmd_basis, "convert": cmd_convert, "probs": cmd_probs,
            "falsify": cmd_falsify, "cauchy": cmd_cauchy}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tol", type=float, default=1e-10)

    parser = argparse.ArgumentParser(
        prog="blochgleason",
        description="Generalized Bloch vectors, Born and non-Born rules, and the additivity scan.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="emit the generalized Pauli matrices")
    p.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("convert", parents=[common], help="density matrix <-> Bloch vector")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dim", type=int)

    p = sub.add_parser("probs", parents=[common], help="Born vs rule probabilities")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--basis", default="computational",
                   help="'computational', 'random' (uses --seed) or a matrix file of column vectors")
    p.add_argument("--f", default="identity")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("falsify", parents=[common], help="face-constraint scan for N >= 3")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--f", default="identity")
    p.add_argument("--grid", type=int, default=64)

    p = sub.add_parser("cauchy", parents=[common], help="discrete Cauchy system")
    p.add_argument("--grid", type=int, default=64)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, status = COMMANDS[args.command](args)
    except (InputError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(formats.render(report, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
