"""Command-line front end.

Every subcommand prints one result, JSON by default or a short text form with
``--format text`` (or ``GLBRANCH_FORMAT=text``). Exit status is 0 on success,
2 on a malformed query and 3 when the query is well formed but outside the
domain of the operation.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
from dataclasses import dataclass

from . import calculus, geometry, oracle, series
from .answer import MultiplicityAnswer
from .core import Segment, dual_segment
from .errors import DomainError, ParseError
from .parsing import (
    format_expression,
    parse_expression,
    parse_generic,
    parse_multisegment,
    parse_segment,
    parse_series,
)

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3
FORMAT_ENV = "GLBRANCH_FORMAT"


class UsageError(ParseError):
    kind = "usage error"

    def __init__(self, message):
        super().__init__(message)

    def __str__(self):
        return f"{self.kind}: {self.message}"


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so batch lines can fail alone."""

    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class Result:
    """A command's output: ``data`` is the JSON payload, ``text`` the human form."""

    data: object
    text: str


def _series_and_target(args):
    ps = parse_series(args.series)
    if args.target.strip().lower() == "st":
        if ps.total_size < 2:
            raise DomainError("a series of size 1 has no St target")
        pi = oracle.steinberg(ps.total_size - 1)
    else:
        pi = parse_generic(args.target)
    return ps, pi


def _answer(ans: MultiplicityAnswer) -> Result:
    if ans.is_exact:
        head = f"exact {ans.value}"
    elif ans.kind == "bounds":
        head = f"between {ans.lower} and {ans.upper}"
    else:
        head = "not covered"
    ext = {True: "higher Ext vanish", False: "higher Ext nonzero", None: "Ext unknown"}
    return Result(ans.to_json(), f"{head} [{ans.result}; {ext[ans.ext_vanishes]}]\n{ans.trace}")


def _bool(value) -> Result:
    return Result(value, "unknown" if value is None else str(value).lower())


def cmd_mult(args):
    return _answer(oracle.multiplicity(*_series_and_target(args)))


def cmd_multz(args):
    return _answer(oracle.multiplicity_Z(parse_series(args.series), parse_segment(args.segment)))


def cmd_goodpair(args):
    ps, pi = _series_and_target(args)
    v = series.is_good_pair(ps, pi)
    data = {
        "good": v.good,
        "cond_a": v.cond_a,
        "cond_b": v.cond_b,
        "bad_segments": [format_expression(d) for d in v.bad_segments],
    }
    text = f"{'good' if v.good else 'not good'} (A: {v.cond_a}, B: {v.cond_b})"
    return Result(data, text)


def cmd_bad(args):
    return _bool(series.is_bad_to(parse_series(args.series), parse_segment(args.segment)))


def cmd_rearrange(args):
    ps = parse_series(args.series)
    cert = series.rearrange_good(ps, parse_segment(args.segment), prefer=args.prefer)
    out = format_expression(cert.apply(ps))
    data = dict(cert.to_json(), result=out)
    return Result(data, f"{out}  [condition {cert.satisfied}, {cert.case}, swaps {list(cert.swaps)}]")


def cmd_derive(args):
    total = calculus.product_rule(parse_series(args.series), args.level, args.side)
    lines = [f"{c} * {format_expression(term)}" for term, c in total.items()]
    return Result(total.to_json(), "\n".join(lines) if lines else "0")


def cmd_dual(args):
    x = parse_expression(args.expr)
    if isinstance(x, series.PrincipalSeries):
        y = series.theta(x)
    elif isinstance(x, Segment):
        y = dual_segment(x)
    else:
        y = x.dual()
    text = format_expression(y)
    return Result(text, text)


def cmd_subquotients(args):
    data, lines = [], []
    for desc in oracle.steinberg_subquotients(args.n):
        params = desc.embedding_params
        data.append({
            "index": desc.index,
            "multisegment": format_expression(desc.multisegment),
            "embedding_params": None if params is None else [str(p) for p in params],
            "langlands": desc.langlands_label,
        })
        lines.append(f"pi_{desc.index} = {format_expression(desc.multisegment)}  L: {desc.langlands_label}")
    return Result(data, "\n".join(lines))


def cmd_nongeneric(args):
    tau = parse_multisegment(args.tau)
    if args.segment.strip().lower() == "st":
        d = oracle.st_segment(tau.size - 1)
    else:
        d = parse_segment(args.segment)
    return _bool(oracle.nongeneric_quotient_test(tau, d))


def cmd_embed(args):
    return _bool(geometry.flag_embedding_exists(geometry.Partition.parse(args.partition)))


def cmd_partitions(args):
    blocks = geometry.segment_partitions(args.n)
    return Result([list(b) for b in blocks], "\n".join(",".join(map(str, b)) for b in blocks))


def cmd_ep_check(args):
    ps, pi = _series_and_target(args)
    return _bool(calculus.euler_poincare_check(ps, pi, oracle.multiplicity(ps, pi)))


def _add_target(p):
    p.add_argument("series", help="principal series, e.g. 'nu(-1/2) x nu(1/2)'")
    p.add_argument("--target", default="st", help="'st' (default) or a generic rep Q(...) / segment")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # SUPPRESS lets the flag appear before or after the subcommand
    common.add_argument(
        "--format", choices=("json", "text"), default=argparse.SUPPRESS,
        help=f"output format (default: ${FORMAT_ENV} or json)",
    )
    parser = _Parser(prog="glbranch", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, summary):
        p = sub.add_parser(name, parents=[common], help=summary)
        p.set_defaults(func=func)
        return p

    p = command("mult", cmd_mult, "Hom multiplicity onto a generic target")
    _add_target(p)

    p = command("multz", cmd_multz, "Hom multiplicity onto Z(segment)")
    p.add_argument("series")
    p.add_argument("--segment", required=True)

    p = command("goodpair", cmd_goodpair, "good-pair verdict")
    _add_target(p)

    p = command("bad", cmd_bad, "is the series bad to a segment")
    p.add_argument("series")
    p.add_argument("--segment", required=True)

    p = command("rearrange", cmd_rearrange, "reorder a good series so an end condition holds")
    p.add_argument("series")
    p.add_argument("--segment", required=True)
    p.add_argument("--prefer", choices=("A", "B"), default="B")

    p = command("derive", cmd_derive, "product-rule derivative of a series")
    p.add_argument("series")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--side", choices=calculus.SIDES, default="right")

    p = command("dual", cmd_dual, "theta of a series, dual of anything else")
    p.add_argument("expr")

    p = command("subquotients", cmd_subquotients, "subquotients of xi(n) with a Steinberg quotient")
    p.add_argument("n", type=int)

    p = command("nongeneric", cmd_nongeneric, "does Z(tau) map onto Q(segment)")
    p.add_argument("tau", help="multisegment Z(...)")
    p.add_argument("--segment", default="st")

    p = command("embed", cmd_embed, "does the parabolic meet GL(n-1) in its Borel")
    p.add_argument("partition", help="block sizes, e.g. 1,2,1")

    p = command("partitions", cmd_partitions, "segment cuttings with at most one 2-block")
    p.add_argument("n", type=int)

    p = command("ep-check", cmd_ep_check, "Euler-Poincare consistency of the oracle's answer")
    _add_target(p)

    p = command("batch", None, "run one query per line, emit JSON lines")
    p.add_argument("file", help="query file, '-' for stdin")
    return parser


def run_query(argv) -> tuple:
    """Run one query. Returns ``(exit_code, Result or error message, format)``."""
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        return EXIT_PARSE, str(exc), None
    fmt = getattr(args, "format", None) or os.environ.get(FORMAT_ENV, "json")
    if args.command == "batch":
        return EXIT_OK, args, fmt
    try:
        return EXIT_OK, args.func(args), fmt
    except ParseError as exc:
        return EXIT_PARSE, str(exc), fmt
    except DomainError as exc:
        return EXIT_DOMAIN, f"domain error: {exc}", fmt


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def run_batch(lines, out) -> int:
    worst = EXIT_OK
    for lineno, raw in enumerate(lines, 1):
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        try:
            argv = shlex.split(raw)
        except ValueError as exc:
            code, res = EXIT_PARSE, f"cannot split line: {exc}"
        else:
            if argv and argv[0] == "batch":
                code, res = EXIT_PARSE, "batch files cannot nest"
            else:
                code, res, _ = run_query(argv)
        record = {"line": lineno, "query": raw, "exit": code}
        if code == EXIT_OK:
            record["result"] = res.data
        else:
            record["error"] = res
        out.write(dumps(record) + "\n")
        worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, res, fmt = run_query(argv)
    if code != EXIT_OK:
        print(res, file=sys.stderr)
        return code
    if isinstance(res, argparse.Namespace):
        if res.file == "-":
            return run_batch(sys.stdin, sys.stdout)
        try:
            with open(res.file, encoding="utf-8") as fh:
                return run_batch(fh.readlines(), sys.stdout)
        except OSError as exc:
            print(f"cannot read {res.file}: {exc}", file=sys.stderr)
            return EXIT_PARSE
    print(dumps(res.data) if fmt == "json" else res.text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
