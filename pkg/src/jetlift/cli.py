"""Command-line interface.

Subcommands: ``dim`` (closed-form dimension), ``zset`` (free cells),
``construct`` (assignment -> verified table), ``verify`` (re-check a stored
table), ``oracle`` (brute-force nullspace cross-check).  Exit codes: 0 on
success, 1 on a mathematical mismatch, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .lift_space import (
    DEFAULT_SEED,
    CoefficientAssignment,
    LiftParams,
    LiftTable,
    dimension,
    free_cells,
)
from .oracle import (
    DEFAULT_MAX_UNKNOWNS,
    OracleSizeError,
    build_constraints,
    check_iso,
    compare_with_construction,
    dump_matrix,
    nullspace,
)
from .verifier import run_all_checks
from .weil_algebra import AlgebraParams


class CliError(Exception):
    """Input problem worth exit code 2."""


def _params(args) -> LiftParams:
    try:
        return LiftParams(AlgebraParams(args.r, args.k), args.s)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}") from exc


def _emit(data: dict | list, out: str | None) -> None:
    text = json.dumps(data, indent=2)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _print_report(rep, witnesses: int, stream) -> None:
    doc = rep.to_json_dict(witness_limit=witnesses)
    for name, counts in doc["checks"].items():
        status = "ok" if counts["failed"] == 0 else "FAIL"
        print(f"{name}: {status} ({counts['cases']} cases, {counts['failed']} failed)", file=stream)
    for w in doc["witnesses"]:
        print(f"  witness {w['check']}: {w['witness']} expected {w['expected']} got {w['actual']}", file=stream)


def cmd_dim(args) -> int:
    params = _params(args)
    d = dimension(params)
    z = len(free_cells(params)) if args.check_z else None
    if args.json:
        doc = {"r": args.r, "k": args.k, "s": args.s, "dimension": d}
        if z is not None:
            doc["free_cells"] = z
        print(json.dumps(doc))
    elif z is not None:
        print(f"{d} (free cells: {z})")
    else:
        print(d)
    if z is not None and z != d:
        print("error: free-cell count disagrees with the closed form", file=sys.stderr)
        return 1
    return 0


def cmd_zset(args) -> int:
    params = _params(args)
    _emit(
        [{"i": list(c.axes), "alpha": list(c.alpha)} for c in free_cells(params)],
        args.out,
    )
    return 0


def cmd_construct(args) -> int:
    if args.infile:
        try:
            assignment = CoefficientAssignment.from_json_dict(_load_json(args.infile))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        if args.r is None or args.k is None or args.s is None:
            raise CliError("--random needs -r, -k and -s")
        assignment = CoefficientAssignment.random(_params(args), seed=args.seed)
    from .lift_space import construct as build

    table = build(assignment)
    _emit(table.to_json_dict(), args.out)
    rep = run_all_checks(table)
    _print_report(rep, args.witnesses, sys.stdout if args.out else sys.stderr)
    return 0 if rep.passed else 1


def cmd_verify(args) -> int:
    try:
        table = LiftTable.from_json_dict(_load_json(args.infile))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    rep = run_all_checks(table, all_slots=args.all_slots)
    _print_report(rep, args.witnesses, sys.stdout)
    return 0 if rep.passed else 1


def cmd_oracle(args) -> int:
    params = _params(args)
    try:
        system = build_constraints(params, max_unknowns=args.max_unknowns)
    except OracleSizeError as exc:
        raise CliError(str(exc)) from exc
    if args.dump:
        dump_matrix(system, args.dump)
    nullity, basis = nullspace(system)
    formula = dimension(params)
    iso = check_iso(system, basis)
    ok = nullity == formula and iso
    print(f"nullspace={nullity} formula={formula} iso={'ok' if iso else 'FAIL'}")
    if args.compare:
        rep = compare_with_construction(params, system=system, nullbasis=basis)
        _print_report(rep, args.witnesses, sys.stdout)
        ok = ok and rep.passed
    return 0 if ok else 1


def _add_params(sub, required: bool = True) -> None:
    sub.add_argument("-r", type=int, required=required, help="truncation order")
    sub.add_argument("-k", type=int, required=required, help="variable count")
    sub.add_argument("-s", type=int, required=required, help="arity of the maps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetlift",
        description="Exact lift tables on truncated polynomial algebras",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dim", help="closed-form dimension of the lift space")
    _add_params(p)
    p.add_argument("--check-z", action="store_true", help="also count the free cells")
    p.add_argument("--json", action="store_true", help="emit a JSON object")
    p.set_defaults(func=cmd_dim)

    p = subs.add_parser("zset", help="enumerate the free cells")
    _add_params(p)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_zset)

    p = subs.add_parser("construct", help="complete an assignment to a verified table")
    _add_params(p, required=False)
    p.add_argument("--in", dest="infile", help="assignment JSON to complete")
    p.add_argument("--random", action="store_true", help="use a seeded random assignment")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for --random")
    p.add_argument("--out", help="write the table JSON here instead of stdout")
    p.add_argument("--witnesses", type=int, default=10, help="witness lines to print")
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser("verify", help="run the exhaustive checks on a stored table")
    p.add_argument("--in", dest="infile", required=True, help="table JSON to check")
    p.add_argument("--witnesses", type=int, default=10, help="witness lines to print")
    p.add_argument("--all-slots", action="store_true", help="sweep every slot, not only the last")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("oracle", help="brute-force nullspace cross-check")
    _add_params(p)
    p.add_argument("--compare", action="store_true", help="also compare against the construction")
    p.add_argument("--max-unknowns", type=int, default=DEFAULT_MAX_UNKNOWNS, help="size guard")
    p.add_argument("--dump", help="write the constraint rows to this path")
    p.add_argument("--witnesses", type=int, default=10, help="witness lines to print")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct" and bool(args.infile) == bool(args.random):
        parser.error("construct needs exactly one of --in or --random")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
