"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check fails, 2 input error, 3 a
mathematical precondition fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence

from . import fockrep, fuzzy, glue, hochschild, nctorus, wick
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3

VERIFY_SUITES = {
    "twistor": "twistor-commutators",
    "c4": "c4-commutators",
    "su2": "su2-bilinears",
    "double": "double-commutators",
    "s3theta": None,
    "sphere-relations": None,
}


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e


def _emit(text: str, out: str | None) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _suite_report(name: str, seed: int) -> Report:
    if VERIFY_SUITES[name]:
        return wick.verify_suite(VERIFY_SUITES[name])
    if name == "s3theta":
        rep = nctorus.s3_relations_report()
        _, _, inv = nctorus.invariant_gens()
        rep.checks.extend(inv.checks)
        glued = glue.glue_s3theta(nctorus.alpha(), nctorus.alpha(), "3/5", "4/5", seed=seed)
        rep.checks.extend(glued.checks)
        return rep
    return fockrep.sphere_relations_suite()


def run_verify(args) -> int:
    if args.suite != "all" and args.suite not in VERIFY_SUITES:
        print(f"unknown suite {args.suite!r}; choose from "
              f"{', '.join(list(VERIFY_SUITES) + ['all'])}", file=sys.stderr)
        return EXIT_INPUT
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    reports = {n: _suite_report(n, args.seed) for n in names}
    doc = {"suite": args.suite, "passed": all(r.passed for r in reports.values()),
           "reports": {n: r.to_dict() for n, r in reports.items()}}
    _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def _load_algebra(path: str) -> hochschild.FDAlgebra:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        return hochschild.FDAlgebra.from_json(data)
    except (ValueError, TypeError, KeyError, IndexError) as e:
        raise InputError(f"{path}: {e}") from e


def _load_bimodule(path: str, A: hochschild.FDAlgebra) -> hochschild.Bimodule:
    """``{dim, left, right}`` with ``left[a]`` the dim x dim matrix of ``e_a . -``."""
    from .scalars import parse_scalar
    data = _load_json(path)
    try:
        d = int(data["dim"])
        acts = []
        for side in ("left", "right"):
            mats = data[side]
            if len(mats) != A.dim:
                raise ValueError(f"'{side}' needs {A.dim} matrices")
            acts.append([[{r: x for r in range(d) if (x := parse_scalar(M[r][c]))}
                          for c in range(d)] for M in mats])
        M = hochschild.Bimodule(d, acts[0], acts[1])
    except (ValueError, TypeError, KeyError, IndexError) as e:
        raise InputError(f"{path}: {e}") from e
    problem = M.validate(A)
    if problem:
        raise InputError(f"{path}: {problem}")
    return M


def run_hh(args) -> int:
    A = _load_algebra(args.algebra)
    M = _load_bimodule(args.coefficients, A) if args.coefficients else None
    try:
        dims = {n: hochschild.hh_dim(A, M, n) for n in args.n}
    except hochschild.ResourceBoundError as e:
        print(f"resource bound: {e}", file=sys.stderr)
        return EXIT_INPUT
    for n, d in dims.items():
        print(f"HH^{n} {d}")
    return EXIT_OK


def run_deform(args) -> int:
    A = _load_algebra(args.algebra)
    data = _load_json(args.cocycle)
    try:
        alpha = hochschild.Cochain.from_json(data, A)
    except (ValueError, TypeError, KeyError, IndexError) as e:
        raise InputError(f"{args.cocycle}: {e}") from e
    if alpha.arity != 2:
        raise InputError(f"{args.cocycle}: cocycle must have arity 2")
    try:
        res = hochschild.extend_deformation(A, alpha, args.order)
    except hochschild.NotCocycleError as e:
        print(f"not a cocycle: {e}", file=sys.stderr)
        return EXIT_MATH
    if isinstance(res, hochschild.ObstructionReport):
        doc = {"status": "obstructed", **res.to_dict()}
        code = EXIT_FAIL
    else:
        doc = {"status": "extended", "order_reached": res.order,
               "associative": hochschild.verify_associativity(A, res, res.order),
               "series": res.to_json()}
        code = EXIT_OK if doc["associative"] else EXIT_FAIL
    _emit(json.dumps(doc, indent=2, sort_keys=True), args.out)
    return code


def _parse_levels(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    return out


def _parse_function(spec: str) -> dict:
    if spec in ("one", "x1", "x2", "x3"):
        return fuzzy.named_function(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"{spec}: neither a named function (one, x1, x2, x3) nor a file")
    coeffs: dict = {}
    with path.open(newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                l, m, re, im = row
                key = (int(l), int(m))
                if abs(key[1]) > key[0]:
                    raise ValueError("|m| exceeds l")
                coeffs[key] = coeffs.get(key, 0) + complex(float(re), float(im))
            except ValueError as e:
                raise InputError(f"{spec}:{lineno}: expected l,m,re,im ({e})") from e
    return coeffs


def run_fuzzy(args) -> int:
    try:
        levels = _parse_levels(args.n_list)
    except ValueError as e:
        raise InputError(f"--n-list: {e}") from e
    f, g = _parse_function(args.f), _parse_function(args.g)
    try:
        rows = fuzzy.convergence_experiment(f, g, levels, args.hbar_matching)
    except ValueError as e:
        raise InputError(str(e)) from e
    text = fuzzy.rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def run_assemble(args) -> int:
    data = _load_json(args.diagram)
    try:
        D = glue.AlgDiagram.from_json(data)
    except glue.NotPosetError as e:
        print(f"{args.diagram}: not a poset: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, TypeError, KeyError, IndexError, AttributeError) as e:
        raise InputError(f"{args.diagram}: {e}") from e
    func = D.functoriality()
    if not func.passed:
        print(f"{args.diagram}: homs are not functorial: "
              f"{', '.join(c.name for c in func.failures())}", file=sys.stderr)
        return EXIT_INPUT
    B = glue.assemble(D, args.terminator).algebra
    _emit(json.dumps(B.to_json(), indent=2, sort_keys=True), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run exact identity suites")
    v.add_argument("--suite", required=True,
                   help="twistor, c4, su2, double, s3theta, sphere-relations or all")
    v.add_argument("--out", help="also write the JSON report here")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    v.set_defaults(func=run_verify)

    h = sub.add_parser("hh", help="Hochschild cohomology dimensions")
    h.add_argument("algebra")
    h.add_argument("--n", type=int, nargs="+", default=[2])
    h.add_argument("--coefficients", help="bimodule file; defaults to the algebra itself")
    h.set_defaults(func=run_hh)

    d = sub.add_parser("deform", help="extend a 2-cocycle to a formal deformation")
    d.add_argument("algebra")
    d.add_argument("cocycle")
    d.add_argument("--order", type=int, default=3)
    d.add_argument("--out")
    d.set_defaults(func=run_deform)

    f = sub.add_parser("fuzzy", help="fuzzy-sphere convergence experiment (CSV)")
    f.add_argument("--n-list", required=True, help="levels, e.g. 1-20 or 1,2,5")
    f.add_argument("--f", required=True, help="one, x1, x2, x3 or a CSV of l,m,re,im rows")
    f.add_argument("--g", required=True)
    f.add_argument("--out")
    f.add_argument("--hbar-matching", choices=("fuzzy", "fk"), default="fuzzy",
                   help="scale dividing the commutator: 1/sqrt(j(j+1)) or 2/(N+1)")
    f.set_defaults(func=run_fuzzy)

    a = sub.add_parser("assemble", help="assembled algebra of a poset diagram")
    a.add_argument("diagram")
    a.add_argument("--terminator", action="store_true")
    a.add_argument("--out")
    a.set_defaults(func=run_assemble)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
