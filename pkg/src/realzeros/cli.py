"""Command-line front end.

Exit codes: 0 all zeros real and distinct (or success), 1 not, 2 input or
usage error, 3 the two deciders disagree (a bug).
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import certificate
from .criterion import Method, check, criterion_level, derived_pair
from .errors import DegreeTooSmall, LevelOutOfRange, NotInterlacing, ParseError, RealZerosError
from .oprl import discrete_measure, extend_downward, monic_derivative_pair, verify_orthogonality
from .parsing import COEFFS_PREFIX, input_echo, parse_polynomial, parse_rational
from .poly import Polynomial, format_poly
from .realroot import PointWitness

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _raw_input(args) -> str:
    if args.coeffs is not None:
        if args.poly is not None:
            raise ParseError("give either an expression or --coeffs, not both")
        return f"{COEFFS_PREFIX} {args.coeffs}"
    if args.poly is None:
        raise ParseError("no polynomial given")
    return args.poly


def _read_polynomial(args) -> tuple[str, Polynomial]:
    raw = _raw_input(args)
    return raw, parse_polynomial(raw)


def _describe_witness(cert) -> str:
    w = cert.witness
    if w is None:
        return ""
    if isinstance(w, PointWitness):
        return f"witness: value {w.value} at x = {w.point}"
    return f"witness: real zero in ({w.lo}, {w.hi}] (Sturm count {w.count})"


def _print_level(level) -> None:
    cert = level.certificate
    print(f"  Q_{level.j} = {format_poly(level.q)}")
    line = f"    {cert.verdict.value} ({cert.reason.value})"
    detail = _describe_witness(cert)
    if detail:
        line += f"; {detail}"
    print(line)


def _timed(timings: dict, key: str, fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    timings[key] = round((time.perf_counter() - t0) * 1000, 3)
    return out


def _oprl_block(P: Polynomial, precision: Optional[Fraction], timings: dict):
    """(record, error) for the realization of ``P``; exactly one is None."""
    try:
        seq, rc = _timed(timings, "recurrence", lambda: extend_downward(*monic_derivative_pair(P)))
    except NotInterlacing as exc:
        return certificate.oprl_failure_record(exc), exc
    mu = _timed(timings, "measure", discrete_measure, seq, rc, precision)
    residual = verify_orthogonality(seq, mu)
    return certificate.oprl_record(rc, mu, residual), None


def cmd_check(args) -> int:
    raw, P = _read_polynomial(args)
    if P.degree < 2:
        raise DegreeTooSmall(f"check needs degree >= 2, got {max(P.degree, 0)}")
    timings: dict = {}
    verdict = _timed(timings, "check", check, P, args.method, False)
    oprl = None
    if args.oprl and verdict.all_real_and_distinct:
        oprl, _ = _oprl_block(P, args.precision, timings)
    if args.json:
        doc = certificate.build_document(input_echo(raw), P, verdict, args.method, oprl,
                                         timings if args.timings else None)
        sys.stdout.write(certificate.dumps(doc))
    else:
        answer = "real and distinct" if verdict.all_real_and_distinct else "NOT all real and distinct"
        print(f"{format_poly(P)}: zeros {answer}")
        if verdict.levels:
            shown = verdict.levels if args.witness else [
                lv for lv in verdict.levels if not lv.certificate.positive]
            print(f"criterion: {len(verdict.levels)} level(s) evaluated")
            for level in shown:
                _print_level(level)
        if verdict.oracle_root_count is not None:
            print(f"sturm: {verdict.oracle_root_count} distinct real root(s) of {P.degree}; "
                  f"squarefree = {verdict.squarefree}")
        if oprl is not None:
            _print_oprl(oprl)
    if verdict.disagreement:
        _err("criterion and Sturm oracle disagree; this is a bug")
        return EXIT_DISAGREE
    return EXIT_TRUE if verdict.all_real_and_distinct else EXIT_FALSE


def cmd_criterion(args) -> int:
    raw, P = _read_polynomial(args)
    derived_pair(P, args.j)  # degree and range validation
    level = criterion_level(P, args.j)
    if args.json:
        doc = {"schema_version": certificate.SCHEMA_VERSION, "input": input_echo(raw),
               "degree": P.degree, **certificate.level_record(level)}
        sys.stdout.write(certificate.dumps(doc))
    else:
        print(format_poly(level.q))
        print("coefficients (ascending): [" + ", ".join(str(c) for c in level.q.coeffs) + "]")
        cert = level.certificate
        print(f"{cert.verdict.value} ({cert.reason.value})")
        detail = _describe_witness(cert)
        if detail:
            print(detail)
    return EXIT_TRUE if level.certificate.positive else EXIT_FALSE


def _print_oprl(rec: dict) -> None:
    print("a = [" + ", ".join(rec["a"]) + "]")
    print("b = [" + ", ".join(rec["b"]) + "]")
    print(f"favard: {'holds (all b_k > 0)' if rec['favard'] else 'violated'}")
    print("nodes:")
    for node, w in zip(rec["nodes"], rec["weights"]):
        print(f"  {node['approx']!r:>24}  in [{node['lo']}, {node['hi']}]  weight {w!r}")
    print(f"orthogonality residual: {rec['residual']:.3e}")


def cmd_oprl(args) -> int:
    raw, P = _read_polynomial(args)
    if P.degree < 2:
        raise DegreeTooSmall(f"oprl needs degree >= 2, got {max(P.degree, 0)}")
    timings: dict = {}
    verdict = None
    if not args.unchecked:
        verdict = _timed(timings, "check", check, P, Method.BOTH, False)
    rec, exc = _oprl_block(P, args.precision, timings)
    if verdict is not None and (exc is None) != verdict.all_real_and_distinct:
        # the recurrence succeeds exactly for real, distinct zeros
        verdict.disagreement = True
    if args.json:
        doc = certificate.build_document(input_echo(raw), P, verdict,
                                         "none" if verdict is None else Method.BOTH.value, rec,
                                         timings if args.timings else None)
        sys.stdout.write(certificate.dumps(doc))
    elif exc is None:
        _print_oprl(rec)
    if verdict is not None and verdict.disagreement:
        _err("criterion, Sturm oracle and recurrence disagree; this is a bug")
        return EXIT_DISAGREE
    if exc is not None:
        _err(f"NotInterlacing: {exc}")
        return EXIT_FALSE
    return EXIT_TRUE


def cmd_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        _err(f"cannot read {args.file}: {exc}")
        return EXIT_USAGE
    n_true = n_false = n_disagree = n_error = 0
    items = []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            P = parse_polynomial(text)
            if P.degree < 2:
                raise DegreeTooSmall(f"degree must be at least 2, got {max(P.degree, 0)}")
            verdict = check(P, Method.BOTH, strict=False)
        except RealZerosError as exc:
            n_error += 1
            _err(f"line {lineno}: {exc}")
            items.append({"line": lineno, "input": text, "verdict": None, "error": str(exc)})
            if not args.json:
                print(f"{lineno}: {text} -> error")
            continue
        if verdict.disagreement:
            n_disagree += 1
        elif verdict.all_real_and_distinct:
            n_true += 1
        else:
            n_false += 1
        items.append({"line": lineno, "input": text, "verdict": verdict.all_real_and_distinct,
                      "disagreement": verdict.disagreement,
                      "distinct_real_roots": verdict.oracle_root_count})
        if not args.json:
            tag = "DISAGREEMENT" if verdict.disagreement else str(verdict.all_real_and_distinct).lower()
            print(f"{lineno}: {text} -> {tag}")
    summary = {"items": n_true + n_false + n_disagree + n_error, "true": n_true, "false": n_false,
               "disagreements": n_disagree, "errors": n_error}
    if args.json:
        sys.stdout.write(certificate.dumps({"schema_version": certificate.SCHEMA_VERSION,
                                            "results": items, "summary": summary}))
    else:
        print(f"{summary['items']} items: {n_true} true, {n_false} false, "
              f"{n_disagree} disagreements, {n_error} errors")
    if n_disagree:
        return EXIT_DISAGREE
    if n_error:
        return EXIT_USAGE
    return EXIT_TRUE


def _precision(text: str) -> Fraction:
    value = parse_rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realzeros",
        description="Certify that all zeros of a rational polynomial are real and distinct.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("poly", nargs="?", help="expression in x, e.g. 'x^3 - 3*x', or 'coeffs: -1,0,1'")
        p.add_argument("--coeffs", help="ascending coefficients, e.g. --coeffs=-1,0,1")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="decide real-and-distinctness")
    add_input(p)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.BOTH.value)
    p.add_argument("--witness", action="store_true", help="show every level, not only failures")
    p.add_argument("--oprl", action="store_true", help="attach the recurrence and measure")
    p.add_argument("--precision", type=_precision, default=None)
    p.add_argument("--timings", action="store_true", help="record timings in JSON output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("criterion", help="print one level polynomial Q_j and its certificate")
    add_input(p)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("oprl", help="three-term recurrence and orthogonality measure")
    add_input(p)
    p.add_argument("--precision", type=_precision, default=None, help="node interval width bound")
    p.add_argument("--unchecked", action="store_true", help="skip the real-rootedness check")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_oprl)

    p = sub.add_parser("batch", help="check one polynomial per line of a file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DegreeTooSmall, LevelOutOfRange) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
