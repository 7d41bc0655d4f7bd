"""Command-line front end.

Exit codes: 0 success, 1 parse or I/O error, 2 proven rank violation,
3 refusal or unsupported input, 4 verification failure or mismatch.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Optional, TextIO

from . import documents as docs
from .construct import build_N, build_T, expected_charpoly, valid_params
from .decompose import (
    DEFAULT_CAP,
    DEFAULT_Q_BOUND,
    Decomposition,
    decompose_companion,
    decompose_companion_matrix,
    decompose_nilpotent,
    verify,
)
from .errors import (
    DegreeZero,
    DimensionMismatch,
    DivisionByZero,
    InternalVerificationFailed,
    NonSquare,
    NotMonic,
    ParseError,
    RankConditionViolated,
    Refusal,
    UnsupportedNilpotenceIndex,
    NotNilpotent,
)
from .field import QQ, Field, PrimeField
from .linalg import charpoly, rank
from .oracle import DEFAULT_BUDGET, brute_force_decompose, classify_all

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RANK = 2
EXIT_REFUSAL = 3
EXIT_VERIFY = 4

DEFAULT_TABLE_BOUND = 14


class CliExit(Exception):
    def __init__(self, code: int, message: str, report: Optional[dict] = None):
        super().__init__(message)
        self.code = code
        self.report = report


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _field_arg(text: str) -> Field:
    t = text.strip().lower()
    if t in ("rationals", "q", "qq"):
        return QQ
    t = t.removeprefix("prime:").removeprefix("gf")
    try:
        return PrimeField(int(t.strip("()")))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a field: {text!r} (use 'rationals' or a prime)") from None


def _read_matrix_input(path: str):
    doc = docs.load_path(path)
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    field = docs.parse_field(doc)
    return doc, field


def _decomposition_fields(dec: Decomposition) -> dict:
    return {
        "T": dec.T.to_strings(),
        "N": dec.N.to_strings(),
        "torsion_exponent": dec.torsion_exponent,
        "nilpotence_index": dec.nilpotence_index,
        "verified": dec.verified,
        "checks": dec.report.as_dict() if dec.report else None,
    }


def cmd_decompose(args) -> tuple[int, dict]:
    doc, field = _read_matrix_input(args.input)
    base = {"report": "decompose", "mode": args.mode, "input": doc}
    q_poly = None
    if args.q_poly:
        qdoc = docs.load_path(args.q_poly)
        q_poly = docs.parse_polynomial(docs.parse_field(qdoc), qdoc.get("polynomial"), "q polynomial")

    a = None
    if "matrix" in doc:
        a = docs.parse_matrix(field, doc["matrix"])
        if not a.is_square:
            raise NonSquare(f"matrix is {a.n_rows}x{a.n_cols}, need square")

    try:
        if args.mode == "search":
            if a is None:
                raise ParseError("search mode needs a 'matrix'")
            dec = brute_force_decompose(a, args.k, budget=args.budget, cap=args.cap)
            if dec is None:
                raise RankConditionViolated(rank(a), a.n_rows, args.k, "exhaustive search found no witness")
        else:
            if args.k != 2:
                raise UnsupportedNilpotenceIndex(
                    f"the {args.mode} construction gives N^2 = 0 only; use --mode search for k={args.k}"
                )
            if args.mode == "nilpotent":
                if a is None:
                    raise ParseError("nilpotent mode needs a 'matrix'")
                dec = decompose_nilpotent(a, cap=args.cap)
            elif "polynomial" in doc:
                p = docs.parse_polynomial(field, doc["polynomial"])
                dec = decompose_companion(p, q_poly, bound=args.bound)
            else:
                if a is None:
                    raise ParseError("companion mode needs a 'matrix' or a 'polynomial'")
                dec = decompose_companion_matrix(a, q_poly, bound=args.bound)
    except RankConditionViolated as exc:
        report = dict(base, status="rank_condition_violated", message=str(exc),
                      rank=exc.rank, threshold=str(Fraction(exc.n, exc.k)))
        raise CliExit(EXIT_RANK, str(exc), report) from None
    except (Refusal, NotNilpotent) as exc:
        report = dict(base, status="refused", reason=type(exc).__name__, message=str(exc))
        raise CliExit(EXIT_REFUSAL, f"{type(exc).__name__}: {exc}", report) from None

    report = dict(base, status="ok", field=field.descriptor(), **_decomposition_fields(dec))
    return EXIT_OK, report


def cmd_verify(args) -> tuple[int, dict]:
    doc, field = _read_matrix_input(args.input)
    source = doc["input"] if isinstance(doc.get("input"), dict) and "matrix" not in doc else doc
    if "matrix" not in source:
        raise ParseError("verify needs the original 'matrix' (top level or under 'input')")
    a = docs.parse_matrix(docs.parse_field(source), source["matrix"])
    T = docs.parse_matrix(field, doc.get("T"), "T")
    N = docs.parse_matrix(field, doc.get("N"), "N")
    d, k = doc.get("torsion_exponent"), doc.get("nilpotence_index")
    for name, v in (("torsion_exponent", d), ("nilpotence_index", k)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ParseError(f"'{name}' must be a positive integer")
    rep = verify(a, Decomposition(T, N, d, k))
    report = {"report": "verify", "checks": rep.as_dict(), "all_ok": rep.all_ok, "input": doc}
    return (EXIT_OK if rep.all_ok else EXIT_VERIFY), report


def cmd_charpoly(args) -> tuple[int, dict]:
    doc, field = _read_matrix_input(args.input)
    a = docs.parse_matrix(field, doc.get("matrix"))
    p = charpoly(a)
    return EXIT_OK, {
        "report": "charpoly",
        "field": field.descriptor(),
        "charpoly": p.to_strings(),
        "text": str(p),
        "input": doc,
    }


def table_rows(n_max: int, fields: list[Field]):
    for field in fields:
        for n in range(2, n_max + 1):
            for p in valid_params(n):
                N = build_N(p, field)
                got = charpoly(build_T(p, field))
                want = expected_charpoly(p, field)
                yield {
                    "field": field.descriptor(),
                    "n": p.n,
                    "s": p.s,
                    "r": p.r,
                    "variant": p.variant.value,
                    "charpoly": str(got),
                    "expected": str(want),
                    "match": got == want,
                    "n_squared_zero": (N @ N).is_zero(),
                }


def cmd_table(args, out: TextIO) -> int:
    if args.n_max > args.bound:
        raise CliExit(EXIT_REFUSAL, f"n_max {args.n_max} exceeds bound {args.bound}")
    fields = args.field or [QQ]
    rows = bad = 0
    for row in table_rows(args.n_max, fields):
        rows += 1
        if not (row["match"] and row["n_squared_zero"]):
            bad += 1
        out.write(docs.dumps_line(row))
        out.flush()
    out.write(docs.dumps_line({"summary": {"rows": rows, "failures": bad}}))
    return EXIT_OK if bad == 0 else EXIT_VERIFY


def cmd_oracle(args) -> tuple[int, dict]:
    try:
        summary = classify_all(args.n, args.q, args.k, budget=args.budget)
    except Refusal as exc:
        raise CliExit(EXIT_REFUSAL, f"{type(exc).__name__}: {exc}") from None
    report = {
        "report": "oracle",
        "n": args.n,
        "q": args.q,
        "k": args.k,
        "threshold": str(summary.threshold),
        "total": summary.total,
        "by_rank": [
            {
                "rank": r,
                "decomposable": c["decomposable"],
                "not_decomposable": c["not_decomposable"],
            }
            for r, c in summary.by_rank.items()
        ],
        "criterion_holds": summary.criterion_holds,
        "counterexamples": [m.to_strings() for m in summary.counterexamples],
    }
    return (EXIT_OK if summary.criterion_holds else EXIT_VERIFY), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionnil",
        description="Split matrices over Q or GF(p) as torsion + nilpotent, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a matrix (or companion polynomial)")
    p.add_argument("input")
    p.add_argument("--mode", choices=["nilpotent", "companion", "search"], default="nilpotent")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--q-poly", help="document with a torsion polynomial for the companion path")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="torsion order search cap")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search mode candidate budget")
    p.add_argument("--bound", type=int, default=DEFAULT_Q_BOUND, help="max e for q | x^e - 1")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check a decomposition report")
    p.add_argument("input")
    p.add_argument("--out")

    p = sub.add_parser("charpoly", help="characteristic polynomial of a matrix")
    p.add_argument("input")
    p.add_argument("--out")

    p = sub.add_parser("table", help="charpoly formula sweep over all (n, s, r, variant)")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--field", type=_field_arg, action="append")
    p.add_argument("--bound", type=int, default=DEFAULT_TABLE_BOUND)
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="exhaustive rank-criterion check over GF(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "decompose": cmd_decompose,
        "verify": cmd_verify,
        "charpoly": cmd_charpoly,
        "oracle": cmd_oracle,
    }
    try:
        if args.command == "table":
            with _output(args.out) as out:
                return cmd_table(args, out)
        code, report = handlers[args.command](args)
    except CliExit as exc:
        if exc.report is not None:
            with _output(args.out) as out:
                out.write(docs.dumps(exc.report))
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, DivisionByZero, DimensionMismatch, NonSquare, NotMonic, DegreeZero, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalVerificationFailed as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    with _output(args.out) as out:
        out.write(docs.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
