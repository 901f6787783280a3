"""Command-line entry point: ``wfbound <subcommand> ...``.

Exit codes: 0 success (and every dominance check holds), 1 at least one
dominance failure or failed self-check, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .g2 import load_raw, verify_g2
from .langlands import DatumError, build_param, datum_from_json, validate_datum
from .orbits import InvalidOrbit, OrbitKind, collapse, dual, enumerate_orbits, parity_classes
from .partitions import SizeMismatch, concat, parse_partition, psum, string_interval, transpose
from .springer import NotInImage, StaircasePiece, oracle_wavefront_factor
from .verifier import PipelineError, check_datum, run_verification
from .wavefront import METHODS, wf_total


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one line instead of the usage block
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _kind(letter: str, rank: int | None, size: int | None = None) -> OrbitKind:
    letter = letter.upper()
    if letter not in "ABCD" or len(letter) != 1:
        raise UsageError(f"unknown type {letter!r}")
    if rank is None:
        if size is None:
            raise UsageError("--rank is required")
        rank = size if letter == "A" else size // 2
    return OrbitKind(letter, rank)


def _load_datum(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return datum_from_json(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_transpose(args) -> int:
    _emit(args, str(transpose(parse_partition(args.partition))))
    return 0


def cmd_sum(args) -> int:
    _emit(args, str(psum(*(parse_partition(p) for p in args.partitions))))
    return 0


def cmd_concat(args) -> int:
    _emit(args, str(concat(*(parse_partition(p) for p in args.partitions))))
    return 0


def cmd_collapse(args) -> int:
    p = parse_partition(args.partition)
    kind = _kind(args.kind, args.rank, p.size)
    _emit(args, str(collapse(kind, p)))
    return 0


def cmd_dual(args) -> int:
    p = parse_partition(args.partition)
    kind = _kind(args.source, args.rank, p.size)
    _emit(args, str(dual(kind, p).partition))
    return 0


def cmd_orbits(args) -> int:
    kind = _kind(args.kind, args.rank)
    orbits = enumerate_orbits(kind)
    if args.json:
        _emit(args, _dumps([str(p) for p in orbits]))
    else:
        _emit(args, "\n".join(str(p) for p in orbits))
    return 0


def cmd_string(args) -> int:
    _emit(args, str(string_interval(args.alpha)))
    return 0


def cmd_param(args) -> int:
    d = _load_datum(args.datum)
    orbit = build_param(d)
    if args.json:
        v = validate_datum(d)
        out = {
            "kind": str(orbit.kind),
            "partition": str(orbit.partition),
            "factor_ranks": list(v.ranks),
            "parity_classes": parity_classes(orbit.partition),
        }
        _emit(args, _dumps(out))
    else:
        _emit(args, str(orbit.partition))
    return 0


def cmd_wavefront(args) -> int:
    d = _load_datum(args.datum)
    r = wf_total(d, method=args.method, oracle=args.oracle)
    out = {
        "per_factor": [str(p) for p in r.per_factor],
        "combined": str(r.combined),
        "method": r.method,
        "mu_sum": str(r.mu_sum),
        "methods_agree": r.agrees,
        "oracle_agrees": r.oracle.value,
    }
    if args.json:
        _emit(args, _dumps(out))
    else:
        lines = [
            f"factor 1: {out['per_factor'][0]}",
            f"factor 2: {out['per_factor'][1]}",
            f"combined ({r.method}): {r.combined}",
            f"mu-sum agrees: {'yes' if r.agrees else 'no'}",
            f"oracle: {r.oracle.value}",
        ]
        _emit(args, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    d = _load_datum(args.datum)
    reference = parse_partition(args.reference) if args.reference else None
    r = check_datum(d, method=args.method, oracle=args.oracle, reference_wavefront=reference)
    _emit(args, _dumps(r.to_json()))
    return 0 if r.dominance_holds else 1


def cmd_enumerate(args) -> int:
    s = run_verification(
        args.group,
        args.max_rank,
        hyperspecial_only=args.hyperspecial_only,
        method=args.method,
        oracle=args.oracle,
    )
    if args.json:
        _emit(args, _dumps(s))
    else:
        head = {k: v for k, v in s.items() if k not in ("dominance_failures", "divergences")}
        head["dominance_failures"] = len(s["dominance_failures"])
        head["divergences"] = len(s["divergences"])
        lines = [_dumps(head)]
        lines += ["FAILURE " + json.dumps(r, sort_keys=True) for r in s["dominance_failures"]]
        lines += ["DIVERGENCE " + json.dumps(r, sort_keys=True) for r in s["divergences"]]
        _emit(args, "\n".join(lines))
    return 1 if s["dominance_failures"] else 0


def _parse_piece(text: str) -> StaircasePiece:
    bits = text.split(":")
    try:
        if bits[0] == "unitary" and len(bits) == 3:
            return StaircasePiece("unitary", int(bits[2]), int(bits[1]))
        if bits[0] in ("b_pair", "d_pair") and len(bits) == 2:
            return StaircasePiece(bits[0], int(bits[1]))
    except ValueError:
        pass
    raise UsageError(f"bad piece {text!r}; use unitary:K:M, b_pair:M or d_pair:M")


def cmd_oracle(args) -> int:
    if args.sweep:
        from .selftest import springer_sweep_problems

        checked, bad = springer_sweep_problems()
        lines = [f"{checked} cases, {len(bad)} mismatches"] + bad
        _emit(args, "\n".join(lines))
        return 1 if bad else 0
    if not args.piece:
        raise UsageError("give --sweep or at least one --piece")
    pieces = [_parse_piece(p) for p in args.piece]
    rank = sum(p.rank for p in pieces)
    _emit(args, str(oracle_wavefront_factor(pieces, args.type.upper(), rank)))
    return 0


def cmd_g2(args) -> int:
    if args.dump:
        _emit(args, _dumps(load_raw()))
        return 0
    results = verify_g2()
    if args.json:
        _emit(args, _dumps([{"check": r.name, "passed": r.passed, "detail": r.detail, "failures": r.failures} for r in results]))
    else:
        lines = []
        for r in results:
            lines.append(f"({r.name}) {'pass' if r.passed else 'FAIL'}  {r.detail}")
            lines += [f"    {f}" for f in r.failures]
        _emit(args, "\n".join(lines))
    return 0 if all(r.passed for r in results) else 1


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(seed=args.seed)
    _emit(args, "\n".join(r.line() for r in results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wfbound", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the result to this file instead of stdout")
    common.add_argument("--json", action="store_true", help="structured JSON output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("transpose", cmd_transpose, "transpose a partition")
    p.add_argument("partition")
    p = add("sum", cmd_sum, "part-by-part sum")
    p.add_argument("partitions", nargs="+")
    p = add("concat", cmd_concat, "multiset union of parts")
    p.add_argument("partitions", nargs="+")
    p = add("collapse", cmd_collapse, "B/C/D collapse")
    p.add_argument("--kind", required=True, help="B, C or D")
    p.add_argument("--rank", type=int)
    p.add_argument("partition")
    p = add("dual", cmd_dual, "order-reversing duality to the dual algebra")
    p.add_argument("--from", dest="source", required=True, help="A, B, C or D")
    p.add_argument("--rank", type=int)
    p.add_argument("partition")
    p = add("orbits", cmd_orbits, "list the orbits of one type")
    p.add_argument("--kind", required=True)
    p.add_argument("--rank", type=int, required=True)
    p = add("string", cmd_string, "the string [alpha] = (alpha, alpha-2, ...)")
    p.add_argument("alpha", type=int)
    for name, func, text in (
        ("param", cmd_param, "nilpotent Langlands parameter of a datum"),
        ("wavefront", cmd_wavefront, "wavefront partition of a datum"),
        ("check", cmd_check, "full report for one datum"),
    ):
        p = add(name, func, text)
        p.add_argument("--datum", required=True, help="JSON file, or - for stdin")
        if name != "param":
            p.add_argument("--method", choices=["per-factor", "mu-sum"], default="per-factor")
            p.add_argument("--oracle", action="store_true", help="cross-check factors with the Springer oracle")
        if name == "check":
            p.add_argument("--reference", help="externally supplied wavefront to compare with")
    p = add("enumerate", cmd_enumerate, "check every datum up to a rank")
    p.add_argument("--group", required=True, help="sp, soodd, soeven, u-unramified, u-ramified")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--hyperspecial-only", action="store_true")
    p.add_argument("--method", choices=list(METHODS), default="per-factor")
    p.add_argument("--oracle", action="store_true")
    p = add("oracle", cmd_oracle, "Springer / j-induction oracle")
    p.add_argument("--sweep", action="store_true", help="compare oracle and closed forms on the standard grid")
    p.add_argument("--type", default="C", help="Weyl group type B, C or D")
    p.add_argument("--piece", action="append", help="unitary:K:M, b_pair:M or d_pair:M (repeatable)")
    p = add("g2", cmd_g2, "G2 table checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--verify", action="store_true")
    group.add_argument("--dump", action="store_true")
    p = add("selftest", cmd_selftest, "run the acceptance suite")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized partition-law sweep")
    return parser


_INPUT_ERRORS = (UsageError, DatumError, InvalidOrbit, SizeMismatch, NotInImage, PipelineError, ValueError, TypeError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except _INPUT_ERRORS as e:
        print(f"wfbound {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
