"""Command-line front end: ``degenstir {table,bernoulli,verify,eval,trig}``.

Data goes to stdout (or ``--output``), diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .bernoulli import BernoulliPole, bernoulli_closed_form, bernoulli_closed_form_table, bernoulli_series
from .families import FAMILIES, family_build, trig_record
from .identities import DEFAULT_ALPHAS, DEFAULT_SEED, Bounds, emit_report, run_suite
from .rings import format_rational, parse_rational
from .series import default_order
from .stirling import ALGORITHMS, triangle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid rational: {text!r}") from None


def _angle(text) -> float:
    """A float, or a multiple of pi such as ``pi/2`` or ``-3*pi/4``."""
    m = re.fullmatch(r"\s*(-?)(\d*(?:\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*", text)
    if m:
        sign, coef, den = m.groups()
        v = (float(coef) if coef else 1.0) * math.pi / (int(den) if den else 1)
        return -v if sign else v
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"invalid angle: {text!r}") from None


def _write(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    lam = None if args.lam is None else _rational(args.lam)
    tri = triangle(args.n_max, args.algorithm)
    if args.format == "json":
        _write(args, tri.to_json(lam))
    elif args.format == "csv":
        _write(args, tri.to_csv(lam))
    else:
        _write(args, tri.to_markdown(lam))
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    alpha = _rational(args.alpha)
    lam = None if args.lam is None else _rational(args.lam)
    if args.route == "series":
        table = bernoulli_series(alpha, args.n_max)
    else:
        try:
            table = bernoulli_closed_form_table(alpha, args.n_max)
        except BernoulliPole as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        _write(args, table.to_json(lam))
    else:
        sym = "l" if args.format == "csv" else "λ"
        lines = ["n,value"] if args.format == "csv" else ["| n | value |", "|---|---|"]
        for n, v in enumerate(table.values):
            cell = v.to_str(sym) if lam is None else format_rational(v(lam))
            lines.append(f'{n},"{cell}"' if args.format == "csv" else f"| {n} | {cell} |")
        _write(args, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    alphas = tuple(_rational(a) for a in args.alpha) if args.alpha else DEFAULT_ALPHAS
    bounds = Bounds(
        n_max=args.n_max if args.n_max is not None else 10,
        r_max=args.r_max,
        alphas=alphas,
        sample_points=args.samples,
        order=args.order if args.order is not None else default_order(),
    )
    try:
        report = run_suite(bounds, seed=args.seed, only=args.only, workers=args.workers)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    fmt = "markdown" if args.format == "markdown" else "json"
    _write(args, emit_report(report, fmt, timings=args.timings))
    for c in report.failures():
        print(f"FAIL {c.id} at {c.counterexample}" + (f": {c.reason}" if c.reason else ""), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def _render(value, args):
    if args.format == "json":
        if isinstance(value, Fraction):
            return json.dumps(format_rational(value))
        return json.dumps(value.to_json())
    if isinstance(value, Fraction):
        return format_rational(value)
    return value.to_str()


def cmd_eval(args) -> int:
    lam = None if args.lam is None else _rational(args.lam)
    if args.bernoulli:
        if args.n is None:
            raise UsageError("--bernoulli needs --n")
        alpha = _rational(args.alpha)
        try:
            value = bernoulli_closed_form(alpha, args.n) if args.route == "closed-form" \
                else bernoulli_series(alpha, args.n)[args.n]
        except BernoulliPole as exc:
            raise UsageError(str(exc)) from None
        if lam is not None:
            value = value(lam)
        _write(args, _render(value, args))
        return EXIT_OK
    if args.family is None:
        raise UsageError("eval needs --family or --bernoulli")
    if args.r is None or (args.n is None and args.family != "BellLike"):
        raise UsageError(f"family {args.family} needs --n and --r")
    if (args.n is not None and args.n < 0) or args.r < 0:
        raise UsageError("--n and --r must be >= 0")
    value = family_build(args.family, args.n or 0, args.r).value
    if args.x is not None:
        value = value.subs_x(_rational(args.x))
        if lam is not None:
            value = value(lam)
    elif lam is not None:
        value = value.subs_lambda(lam)
    _write(args, _render(value, args))
    return EXIT_OK


def cmd_trig(args) -> int:
    lam = _rational(args.lam)
    x = _angle(args.x)
    if args.n_terms < args.r + 10:
        raise UsageError("--n-terms must be at least r + 10")
    _write(args, json.dumps(trig_record(args.r, x, lam, args.n_terms)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degenstir", description="Degenerate Stirling/Bernoulli exact engine.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "csv", "markdown"), default="json"):
        sp.add_argument("--output", "-o", help="write to this path instead of stdout")
        sp.add_argument("--format", choices=formats, default=default)

    t = sub.add_parser("table", help="degenerate Stirling triangle")
    t.add_argument("--n-max", type=int, default=20)
    t.add_argument("--lambda", dest="lam", help="evaluate at this rational lambda")
    t.add_argument("--algorithm", choices=ALGORITHMS, default="recurrence")
    common(t)
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bernoulli", help="degenerate Bernoulli numbers of order alpha")
    b.add_argument("--alpha", default="1")
    b.add_argument("--n-max", type=int, default=20)
    b.add_argument("--lambda", dest="lam")
    b.add_argument("--route", choices=("series", "closed-form"), default="series")
    common(b)
    b.set_defaults(func=cmd_bernoulli)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--r-max", type=int, default=10)
    v.add_argument("--alpha", action="append", help="order alpha for Bernoulli cases (repeatable)")
    v.add_argument("--samples", type=int, default=20, help="random rational sample points per check")
    v.add_argument("--order", type=int, default=None, help="series truncation order")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--only", action="append", help="run only this case id (repeatable)")
    v.add_argument("--timings", action="store_true", help="include per-case wall-clock milliseconds")
    v.add_argument("--workers", type=int, default=1)
    common(v, ("json", "markdown"))
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a family polynomial or a Bernoulli number")
    e.add_argument("--family", choices=FAMILIES)
    e.add_argument("--bernoulli", action="store_true")
    e.add_argument("--n", type=int)
    e.add_argument("--r", type=int)
    e.add_argument("--x")
    e.add_argument("--alpha", default="1")
    e.add_argument("--lambda", dest="lam")
    e.add_argument("--route", choices=("series", "closed-form"), default="series")
    common(e, ("text", "json"), "text")
    e.set_defaults(func=cmd_eval)

    g = sub.add_parser("trig", help="cosine/sine sums of (k)_{r,l}/k! against closed forms")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--x", required=True, help="angle, e.g. 0.7 or pi/2")
    g.add_argument("--lambda", dest="lam", required=True)
    g.add_argument("--n-terms", type=int, default=200)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_trig)
    return p


# options whose values may legitimately start with "-" (e.g. --lambda -1/2)
_SIGNED_OPTS = {"--lambda", "--alpha", "--x"}


def _join_signed(argv: list) -> list:
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _SIGNED_OPTS and i + 1 < len(argv) and re.match(r"-[\d.p]", argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_signed(sys.argv[1:] if argv is None else list(argv)))
    if getattr(args, "n_max", None) is not None and args.n_max < 0:
        print("degenstir: --n-max must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"degenstir: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
