"""Command-line front end: classify, survey, lift and verify.

Every invocation prints one JSON (or plain text) document.  Exit status
is 0 whenever a decision was computed, including negative ones, 1 for
usage, parse and domain errors, and 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Sequence

from .core import TRUNC_SERIES, Element, Ring
from .decide import (
    CleanWitness,
    mat2_strongly_clean,
    mat2_very_clean,
    scalar_strongly_clean,
    scalar_very_clean,
    tri2_strongly_clean,
    tri2_very_clean,
)
from .errors import AlgebraError, InvariantViolation, NotStronglyClean, NotVeryClean, NotVeryCleanAtZero
from .lift import LiftResult, mat2_lift, tri2_lift
from .matrices import Mat2, Tri2Element
from .oracle import M2, SCALAR, STRUCTURES, SUITES, T2, survey, verify_theorem
from .parsing import parse_element, parse_mat2, parse_ring, parse_tri2
from .rings import PS

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2

_PROCEDURES: dict[tuple[str, str], Callable[[Any], CleanWitness]] = {
    (SCALAR, "very"): scalar_very_clean,
    (SCALAR, "strong"): scalar_strongly_clean,
    (M2, "very"): mat2_very_clean,
    (M2, "strong"): mat2_strongly_clean,
    (T2, "very"): tri2_very_clean,
    (T2, "strong"): tri2_strongly_clean,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def render(obj: Any) -> Any:
    """JSON-ready form of elements and matrices."""
    if isinstance(obj, (Mat2, Tri2Element)):
        return [[str(e) for e in row] for row in obj.rows()]
    if isinstance(obj, Element):
        return str(obj)
    return obj


def _parse_input(text: str, ring: Ring, structure: str) -> Any:
    if structure == SCALAR:
        return parse_element(text, ring)
    if structure == M2:
        return parse_mat2(text, ring)
    return parse_tri2(text, ring)


def _witness_record(w: CleanWitness) -> dict[str, Any]:
    checks = w.checks()
    return {
        "e": render(w.idempotent),
        "sigma": w.sign,
        "u": render(w.unit),
        "checks": {k: checks[k] for k in ("idempotent", "commutes", "unit")},
    }


def cmd_classify(args: argparse.Namespace) -> dict[str, Any]:
    ring = parse_ring(args.ring)
    a = _parse_input(args.input, ring, args.structure)
    procedure = _PROCEDURES[(args.structure, args.mode)]
    record: dict[str, Any] = {
        "command": "classify",
        "ring": str(ring.descriptor),
        "structure": args.structure,
        "mode": args.mode,
        "input": render(a),
    }
    positive = "very_clean" if args.mode == "very" else "strongly_clean"
    try:
        w = procedure(a)
    except (NotVeryClean, NotStronglyClean) as exc:
        record.update({"decision": f"not_{positive}", "e": None, "sigma": None, "u": None, "checks": None})
        record["reason"] = str(exc)
        return record
    record["decision"] = positive
    record.update(_witness_record(w))
    return record


def cmd_survey(args: argparse.Namespace) -> dict[str, Any]:
    ring = parse_ring(args.ring)
    report = survey(ring, args.structure, chunks=args.chunks, workers=args.workers)
    return {"command": "survey", **report.to_dict()}


def _lift_record(res: LiftResult) -> dict[str, Any]:
    return {
        "decision": "very_clean",
        "order": res.order,
        "A": render(res.A),
        "E": render(res.E),
        "sigma": res.sign,
        "U": render(res.U),
        "E0": render(res.constant_witness().idempotent),
        "checks": res.checks(),
    }


def cmd_lift(args: argparse.Namespace) -> dict[str, Any]:
    ring = parse_ring(args.ring)
    if ring.descriptor.kind != TRUNC_SERIES:
        if args.order is None:
            raise UsageError("lift needs a PS(...) ring or --order")
        ring = PS(ring, args.order)
    elif args.order is not None and args.order != ring.order:
        raise UsageError(f"--order {args.order} conflicts with {ring.descriptor}")
    structure = args.structure or M2
    A = _parse_input(args.input, ring, structure)
    record: dict[str, Any] = {"command": "lift", "ring": str(ring.descriptor), "structure": structure}
    try:
        res = mat2_lift(A) if structure == M2 else tri2_lift(A)
    except NotVeryCleanAtZero as exc:
        record.update({"decision": "not_very_clean_at_zero", "reason": str(exc)})
        return record
    record.update(_lift_record(res))
    return record


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    ring = parse_ring(args.ring) if args.ring else None
    order = args.order if args.order is not None else 2
    try:
        report = verify_theorem(args.suite, ring, order=order, samples=args.samples, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"command": "verify", **report.to_dict()}


def _text_lines(obj: Any, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            lines += _text_lines(value, f"{prefix}{key}." if isinstance(value, dict) else f"{prefix}{key}")
        return lines
    return [f"{prefix.rstrip('.')}: {json.dumps(obj, ensure_ascii=False)}"]


def format_output(record: dict[str, Any], fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_text_lines(record)) + "\n"
    return json.dumps(record, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="veryclean", description="Very clean and strongly clean decompositions.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("classify", help="decide one element or matrix")
    p.add_argument("--ring", required=True)
    p.add_argument("--structure", choices=STRUCTURES, default=SCALAR)
    p.add_argument("--mode", choices=("very", "strong"), default="very")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("survey", help="classify every element of a finite structure")
    p.add_argument("--ring", required=True)
    p.add_argument("--structure", choices=STRUCTURES, default=M2)
    p.add_argument("--chunks", type=_positive, default=1)
    p.add_argument("--workers", type=_positive, default=1)
    common(p)
    p.set_defaults(run=cmd_survey)

    p = sub.add_parser("lift", help="lift a decomposition from A(0) to A(x)")
    p.add_argument("--ring", required=True)
    p.add_argument("--structure", choices=(M2, T2))
    p.add_argument("--order", type=_positive)
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(run=cmd_lift)

    p = sub.add_parser("verify", help="run a theorem suite against the oracle")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--ring")
    p.add_argument("--order", type=_positive)
    p.add_argument("--samples", type=_positive, default=32)
    p.add_argument("--seed", type=_unsigned, default=0)
    common(p)
    p.set_defaults(run=cmd_verify)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _unsigned(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        record = args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    text = format_output(record, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head); stay quiet on exit
            sys.stdout = open(os.devnull, "w")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
