"""Command-line interface.

Subcommands ``series``, ``composita``, ``reverse``, ``reciprocal`` and
``solve``. Exit codes: 0 ok, 2 parse error, 3 precondition error, 4 failed
internal verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import series as ser
from . import transforms as tr
from . import triangle as tri
from .dsl import evaluate_composita, evaluate_series, parse
from .errors import ExprSyntaxError, PreconditionError, VerificationError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    value = Fraction(text)
    if format_rational(value) != text:
        raise ValueError(f"{text!r} is not a canonical rational")
    return value


@dataclass
class OutputDocument:
    """A sequence or triangle of exact rationals plus where it came from."""

    kind: str
    order: int
    command: str
    expr: str
    coefficients: list[Fraction] = field(default_factory=list)
    rows: list[list[Fraction]] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "order": self.order, "command": self.command, "expr": self.expr}
        if self.kind == "sequence":
            d["coefficients"] = [[str(n), format_rational(c)] for n, c in enumerate(self.coefficients)]
        else:
            d["rows"] = [[format_rational(v) for v in row] for row in self.rows]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> OutputDocument:
        doc = cls(kind=d["kind"], order=int(d["order"]), command=d["command"], expr=d["expr"])
        if doc.kind == "sequence":
            for i, (n, value) in enumerate(d["coefficients"]):
                if int(n) != i:
                    raise ValueError(f"coefficient index {n} out of sequence")
                doc.coefficients.append(parse_rational(value))
        elif doc.kind == "triangle":
            doc.rows = [[parse_rational(v) for v in row] for row in d["rows"]]
        else:
            raise ValueError(f"unknown document kind {doc.kind!r}")
        return doc

    @classmethod
    def from_json(cls, text: str) -> OutputDocument:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.kind == "sequence":
            w.writerow(["n", "value"])
            for n, c in enumerate(self.coefficients):
                w.writerow([n, format_rational(c)])
        else:
            w.writerow(["n", "k", "value"])
            for n, row in enumerate(self.rows, start=1):
                for k, v in enumerate(row, start=1):
                    w.writerow([n, k, format_rational(v)])
        return buf.getvalue()

    def to_table(self) -> str:
        if self.kind == "sequence":
            cells = [(str(n), format_rational(c)) for n, c in enumerate(self.coefficients)]
            w0 = max(len("n"), *(len(a) for a, _ in cells))
            w1 = max(len("a(n)"), *(len(b) for _, b in cells))
            lines = [f"{'n':>{w0}}  {'a(n)':>{w1}}"]
            lines += [f"{a:>{w0}}  {b:>{w1}}" for a, b in cells]
            return "\n".join(lines) + "\n"
        text = [[format_rational(v) for v in row] for row in self.rows]
        if not text:
            return ""
        width = max(len(s) for row in text for s in row)
        label = len(str(len(text)))
        return "".join(
            f"{n:>{label}}: " + " ".join(s.rjust(width) for s in row) + "\n"
            for n, row in enumerate(text, start=1)
        )

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_table()


def _sequence(command: str, expr: str, s: ser.Series) -> OutputDocument:
    return OutputDocument("sequence", s.order, command, expr, coefficients=list(s.coeffs))


def cmd_series(expr: str, order: int) -> OutputDocument:
    return _sequence("series", expr, evaluate_series(parse(expr), order))


def cmd_composita(expr: str, rows: int, check: bool = False) -> tuple[OutputDocument, bool | None]:
    """Triangle of ``expr``; with ``check``, compare against composition enumeration."""
    e = parse(expr)
    t = evaluate_composita(e, rows)
    doc = OutputDocument("triangle", rows, "composita", expr, rows=[list(r) for r in t.rows()])
    if not check:
        return doc, None
    n = min(rows, tri.COMPOSITIONS_CAP)
    brute = tri.composita_by_compositions(evaluate_series(e, n), n)
    return doc, brute == t.truncate(n)


def cmd_reverse(expr: str, order: int) -> OutputDocument:
    f = evaluate_series(parse(expr), max(order, 2 * order - 2, 1))
    result = tr.reverse_series(f, order)
    oracle = ser.reversion_series_newton(f.truncate(max(order, 1))).truncate(order)
    if result != oracle:
        raise VerificationError("reversion formula disagrees with Newton reversion")
    return _sequence("reverse", expr, result)


def cmd_reciprocal(expr: str, order: int) -> OutputDocument:
    b = evaluate_series(parse(expr), max(order, 2 * order - 1))
    result = tr.reciprocal_via_composita(b, order)
    if result != ser.reciprocal_series(b.truncate(order)):
        raise VerificationError("reciprocal formula disagrees with the reciprocal recurrence")
    return _sequence("reciprocal", expr, result)


def cmd_solve(f_expr: str, g_expr: str, order: int, factorial_scale: bool = False) -> OutputDocument:
    a = tr.solve_functional(parse(f_expr), parse(g_expr), order)
    if factorial_scale:
        a = ser.Series([math.factorial(n) * c for n, c in enumerate(a.coeffs)], a.order)
    return _sequence("solve", f"F={f_expr}; G={g_expr}", a)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="composita",
        description="Exact compositae, reversion and reciprocals of generating functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, size_flag="--order"):
        p.add_argument(size_flag, type=int, default=ser.DEFAULT_ORDER, metavar="N")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("series", help="coefficients of an expression")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("composita", help="composita triangle of an expression")
    p.add_argument("expr")
    common(p, "--rows")
    p.add_argument("--check", action="store_true", help="cross-check against composition enumeration")

    p = sub.add_parser("reverse", help="compositional inverse via the reversion composita")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("reciprocal", help="multiplicative inverse via the reciprocal composita")
    p.add_argument("expr")
    common(p)

    p = sub.add_parser("solve", help="solve F(A(x)) = G(x) for A")
    p.add_argument("--f", required=True, dest="f_expr")
    p.add_argument("--g", required=True, dest="g_expr")
    common(p)
    p.add_argument("--factorial-scale", action="store_true", help="print n! a(n)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    size = args.rows if args.command == "composita" else args.order
    if size < 1:
        print("error: order must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    status = EXIT_OK
    try:
        if args.command == "series":
            doc = cmd_series(args.expr, size)
        elif args.command == "composita":
            doc, equal = cmd_composita(args.expr, size, args.check)
        elif args.command == "reverse":
            doc = cmd_reverse(args.expr, size)
        elif args.command == "reciprocal":
            doc = cmd_reciprocal(args.expr, size)
        else:
            doc = cmd_solve(args.f_expr, args.g_expr, size, args.factorial_scale)
    except ExprSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        if exc.subexpression is None:
            exc.subexpression = getattr(args, "expr", None) or f"{args.f_expr} / {args.g_expr}"
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"internal verification failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(doc.render(args.format))
    if args.command == "composita" and args.check:
        print("EQUAL" if equal else "UNEQUAL", file=sys.stderr if args.format == "json" else sys.stdout)
        if not equal:
            status = EXIT_VERIFY
    return status


if __name__ == "__main__":
    sys.exit(main())
