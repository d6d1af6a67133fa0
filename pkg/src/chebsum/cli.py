"""``chebsum`` command line: evaluate, sum, verify, and print tables.

Parameters are given as ``key=value`` words after the subcommand, e.g.::

    chebsum eval upoly N=4 z=i/2
    chebsum sum N=3 z=1/2 closed
    chebsum verify lemma4 --n-max 30
    chebsum table 1 --n-max 4 --z 1/2

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from .chebpoly import IntPolynomial, eval_exact, eval_float, gegenbauer_poly, scaled_deriv_poly, u_poly
from .continuation import BoundaryPoint, SingularPointError, boundary_sum
from .exactnum import GammaPoleError, GaussianRational, parse_number
from .sequences import FIBONACCI, LUCAS, PELL, SequenceKind, base_term, convolved_term, phi
from .series import (
    Direction,
    DomainError,
    SeriesQuery,
    check_domain,
    closed_form_rational,
    closed_form_surd,
    partial_sum,
)
from .tables import TableSpec, table_rows
from .verify import SUITES, Bounds, run

__all__ = ["main", "format_value"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
FORMAT_ENV = "CHEBSUM_FORMAT"
FORMATS = ("text", "json", "csv")
VERIFY_CAP = 200


class UsageError(ValueError):
    pass


# -- rendering ---------------------------------------------------------------

def _format_float(x: float) -> str:
    text = format(x, ".17g")
    if not math.isfinite(x):
        return text
    mantissa, _, exp = text.partition("e")
    if "." not in mantissa:
        mantissa += ".0"
    return f"{mantissa}e{exp}" if exp else mantissa


def format_value(value) -> tuple[str, str]:
    """``(text, exactness)``; exact values in ``a/b+c/d*i`` form, floats to 17 digits."""
    if isinstance(value, (GaussianRational, int, Fraction)):
        return str(value), "exact"
    if isinstance(value, IntPolynomial):
        return str(value), "exact"
    z = complex(value)
    if z.imag == 0:
        return _format_float(z.real), "approx"
    imag = _format_float(z.imag)
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_float(z.real)}{sign}{imag}*i", "approx"


def _emit(fmt: str, value, extra: dict | None = None) -> None:
    text, exactness = format_value(value)
    if fmt == "json":
        payload = {"value": text, "exactness": exactness}
        payload.update(extra or {})
        print(json.dumps(payload))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = ["value", "exactness", *(extra or {})]
        w.writerow(keys)
        w.writerow([text, exactness, *(extra or {}).values()])
        sys.stdout.write(buf.getvalue())
    else:
        line = text
        if extra and "provenance" in extra:
            line += f" ({extra['provenance']})"
        print(line)


# -- parameter parsing ---------------------------------------------------------

_FLAG_WORDS = {"at"}  # filler, as in "upoly N=4 at z=i/2"


def _parse_params(words: list[str]) -> tuple[dict[str, str], list[str]]:
    params: dict[str, str] = {}
    bare: list[str] = []
    for w in words:
        if "=" in w:
            key, _, val = w.partition("=")
            key = key.strip()
            if not key or not val:
                raise UsageError(f"malformed parameter {w!r}")
            params[key] = val.strip()
        elif w not in _FLAG_WORDS:
            bare.append(w)
    return params, bare


def _int(params: dict, key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise UsageError(f"missing parameter {key}=")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer, got {params[key]!r}") from None


def _number(text: str):
    try:
        return parse_number(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}: {exc}") from None


def _kind(params: dict) -> SequenceKind:
    name = params.get("kind")
    if name is None:
        raise UsageError("missing parameter kind=")
    table = {"fib": FIBONACCI, "fibonacci": FIBONACCI, "lucas": LUCAS, "pell": PELL}
    if name.lower() in table:
        return table[name.lower()]
    if name.lower() in ("phi", "section"):
        return phi(_int(params, "k"))
    raise UsageError(f"unknown sequence kind {name!r}")


def _direction(params: dict, bare: list[str]) -> Direction:
    text = params.get("direction")
    for w in bare:
        if w.lower() in ("pos", "neg", "positive", "negative"):
            text = w
    try:
        return Direction.parse(text or "pos")
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _evaluate(poly: IntPolynomial, z):
    if z is None:
        return poly
    if isinstance(z, GaussianRational):
        return eval_exact(poly, z)
    return eval_float(poly, z)


# -- subcommands ---------------------------------------------------------------

def cmd_eval(args) -> int:
    params, bare = _parse_params(args.params)
    z = _number(params["z"]) if "z" in params else None
    obj = args.object
    if obj == "upoly":
        value = _evaluate(u_poly(_int(params, "N")), z)
    elif obj == "deriv":
        value = _evaluate(scaled_deriv_poly(_int(params, "N"), _int(params, "s")), z)
    elif obj == "gegenbauer":
        n = _int(params, "n" if "n" in params else "N")
        value = _evaluate(gegenbauer_poly(n, _int(params, "alpha")), z)
    elif obj == "sequence":
        value = base_term(_kind(params), _int(params, "N"))
    else:
        value = convolved_term(_kind(params), _int(params, "N"), _int(params, "s", 0))
    if bare:
        raise UsageError(f"unexpected words {' '.join(bare)!r}")
    _emit(args.format, value)
    return EXIT_OK


_MODES = ("partial", "closed", "surd", "regularized")


def _on_unit_circle(z) -> bool:
    if isinstance(z, GaussianRational):
        return z.norm() == 1
    return abs(abs(complex(z)) - 1) <= 1e-12


def cmd_sum(args) -> int:
    params, bare = _parse_params(args.params)
    mode = params.get("mode")
    rest = []
    for w in bare:
        if w in _MODES:
            mode = w
        elif w.lower() not in ("pos", "neg", "positive", "negative"):
            rest.append(w)
    if rest:
        raise UsageError(f"unexpected words {' '.join(rest)!r}")
    if mode is None:
        mode = "partial" if "S" in params else "closed"
    if mode not in _MODES:
        raise UsageError(f"unknown mode {mode!r}; choose from {', '.join(_MODES)}")
    N = _int(params, "N")
    if N < 1:
        raise UsageError("N must be >= 1")
    direction = _direction(params, bare)
    label = "positive" if direction is Direction.POS else "negative"

    if mode == "regularized" and "t" in params:
        try:
            t = Fraction(params["t"])
        except ValueError:
            raise UsageError(f"t must be a rational, got {params['t']!r}") from None
        rv = boundary_sum(N, BoundaryPoint(t), direction)
        extra = {"provenance": rv.provenance}
        if rv.error_bound is not None:
            extra["error_bound"] = rv.error_bound
        _emit(args.format, rv.value, extra)
        return EXIT_OK

    if "z" not in params:
        raise UsageError("missing parameter z=")
    z = _number(params["z"])
    if z == 1:
        raise SingularPointError("z = 1 is the pole of every closed form")

    if mode == "partial":
        S = _int(params, "S")
        value = partial_sum(SeriesQuery(N, z, direction, S))
        provenance = f"partial sum of the {label}-power series, sigma = 0..{S}"
    elif mode == "closed":
        value = closed_form_rational(N, z, direction)
        provenance = f"rational closed form, {label} powers"
        try:
            check_domain(z, direction)
        except DomainError:
            provenance += "; series diverges here, value is the continuation"
    elif mode == "surd":
        check_domain(z, direction)
        branch = _int(params, "branch", 1)
        if branch not in (1, -1):
            raise UsageError("branch must be 1 or -1")
        value = closed_form_surd(N, z if not isinstance(z, GaussianRational) else complex(z), direction, branch)
        provenance = f"square-root closed form, {label} powers"
    else:
        if not _on_unit_circle(z):
            raise DomainError(f"regularized sums need |z| = 1, got z = {params['z']}")
        value = closed_form_rational(N, z, direction)
        provenance = f"rational closed form ({label} powers) continued to the boundary"
    _emit(args.format, value, {"provenance": provenance})
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = Bounds(n_max=args.n_max, s_max=args.s_max, eps=args.eps, seed=args.seed)
    for name, value in (("--n-max", args.n_max), ("--s-max", args.s_max)):
        if value is not None and not 0 <= value <= VERIFY_CAP:
            raise UsageError(f"{name} must be between 0 and {VERIFY_CAP}")
    if args.eps is not None and not 0 < args.eps < 1:
        raise UsageError("--eps must be in (0, 1)")
    reports = run(args.suite, bounds)
    payload = [r.to_dict() for r in reports]
    ok = all(r.ok for r in reports)
    print(json.dumps(payload if args.suite == "all" else payload[0], indent=2))
    for r in reports:
        status = "ok" if r.ok else f"{len(r.failures)} FAILED"
        print(f"{r.suite:>11}: {r.cases_run:5d} cases, {status} ({r.seconds:.2f}s)", file=sys.stderr)
        for note in r.notes:
            print(f"{'':>11}  note: {note}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL




def _table_number(text: str) -> int:
    name = text.lower().removeprefix("table")
    if name not in ("1", "2"):
        raise UsageError(f"unknown table {text!r}; use 1 or 2")
    return int(name)


def cmd_table(args) -> int:
    params, bare = _parse_params(args.params)
    if bare:
        raise UsageError(f"unexpected words {' '.join(bare)!r}")
    n_max = args.n_max if args.n_max is not None else _int(params, "N_max", 4)
    samples = list(args.z or [])
    if "z" in params:
        samples.extend(params["z"].split(","))
    zs = []
    for text in samples:
        z = _number(text)
        if not isinstance(z, GaussianRational):
            raise UsageError(f"table samples must be exact, got {text!r}")
        zs.append(z)
    spec = TableSpec(_table_number(args.table), n_max, tuple(zs))
    rows = table_rows(spec)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        for row in rows:
            values = "  ".join(f"{k}: {v}" for k, v in row.items() if k.startswith("z="))
            print(f"N={row['N']}: {row['sum']}" + (f"  [{values}]" if values else ""))
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "text").strip().lower() or "text"
    return fmt if fmt in FORMATS else "text"


def build_parser() -> argparse.ArgumentParser:
    def add_format_flags(p, default):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", dest="format", action="store_const", const="json", default=default,
                           help="machine-readable JSON on stdout")
        group.add_argument("--csv", dest="format", action="store_const", const="csv", default=default,
                           help="CSV on stdout")

    # accepted before or after the subcommand; SUPPRESS keeps the subparser
    # from overwriting a flag given up front
    output = argparse.ArgumentParser(add_help=False)
    add_format_flags(output, argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="chebsum",
        description="Series of scaled Chebyshev U derivatives: exact sums, identities, tables.",
        epilog=f"Default output format comes from ${FORMAT_ENV} (text, json or csv).",
    )
    add_format_flags(parser, None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[output], help="evaluate a polynomial or sequence term")
    p.add_argument("object", choices=("upoly", "deriv", "gegenbauer", "sequence", "convolved"))
    p.add_argument("params", nargs="*", help="key=value parameters: N, s, n, alpha, kind, k, z")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sum", parents=[output], help="sum one of the two series families")
    p.add_argument("params", nargs="*",
                   help="N=, z=, direction=pos|neg, S= and a mode word: partial, closed, surd, regularized")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", parents=[output], help="run identity-verification suites (JSON report)")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument("--n-max", type=int)
    p.add_argument("--s-max", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[output], help="closed forms of the two series for small N")
    p.add_argument("table", help="1 or 2 (also table1, table2)")
    p.add_argument("params", nargs="*", help="N_max=, z=a,b,...")
    p.add_argument("--n-max", type=int)
    p.add_argument("--z", action="append", help="exact sample point (repeatable)")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = _default_format()
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"chebsum: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except GammaPoleError as exc:
        print(f"chebsum: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError) as exc:
        print(f"chebsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
