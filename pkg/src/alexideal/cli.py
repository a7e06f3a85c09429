"""``alexideal`` command-line front end.

Wherever a knot file is expected, ``@TEXT`` supplies the file contents inline.
Exit codes: 0 success, 1 usage error, 2 parse error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from .dsl import DSLParseError, format_knot, load_knot
from .knots import (
    colorings_count,
    connect_sum,
    determinant,
    kinoshita_realize,
    realize_ideal,
    twist_spin,
    two_bridge,
)
from .laurent import PolyParseError, parse_poly
from .obstruct import distinguish, graph_dot, independence_certificate, report, ribbon_compatible
from .zideal import ResourceBoundExceeded, format_ideal, hilbert_function, parse_ideal

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BOUND = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _ParseFailure(Exception):
    def __init__(self, source: str, line: int, col: int, msg: str):
        super().__init__(f"{source}:{line}:{col}: parse error: {msg}")


def _unquote(text: str) -> str:
    # @"..." reaches us with the quotes intact when no shell is involved
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        return text[1:-1]
    return text


def _read(arg: str) -> tuple[str, str]:
    """Return (source label, text) for a file path or ``@inline`` argument."""
    if arg.startswith("@"):
        return "<inline>", _unquote(arg[1:])
    try:
        with open(arg, encoding="utf-8") as fh:
            return arg, fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None


def _knot(arg: str):
    source, text = _read(arg)
    default = "K" if source == "<inline>" else os.path.splitext(os.path.basename(source))[0]
    try:
        return load_knot(text, default)
    except DSLParseError as exc:
        raise _ParseFailure(source, exc.line, exc.col, exc.msg) from None


def _inline(arg: str) -> str:
    return _unquote(arg[1:]) if arg.startswith("@") else arg


def _poly(arg: str):
    text = _inline(arg)
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise _ParseFailure("<poly>", 1, exc.pos + 1, str(exc).rsplit(" at column", 1)[0]) from None


def _ideal(arg: str):
    text = _inline(arg)
    try:
        return parse_ideal(text)
    except PolyParseError as exc:
        raise _ParseFailure("<ideal>", 1, exc.pos + 1, str(exc).rsplit(" at column", 1)[0]) from None


# ---------------------------------------------------------------------------
# subcommands; each returns the text written to stdout
# ---------------------------------------------------------------------------

def cmd_ideal(args) -> str:
    K = _knot(args.file)
    if args.elementary < 0:
        raise UsageError("--elementary must be nonnegative")
    return format_ideal(K.elementary_ideal(args.elementary)) + "\n"


def cmd_knot(args) -> str:
    try:
        K = two_bridge(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return format_knot(K)


def cmd_twist_spin(args) -> str:
    # the input is read as a classical knot whatever its genus header says
    K = replace(_knot(args.file), genus=None)
    return format_knot(twist_spin(K, args.n))


def cmd_sum(args) -> str:
    return format_knot(connect_sum(_knot(args.a), _knot(args.b)))


def cmd_realize(args) -> str:
    try:
        if args.poly is not None:
            K = kinoshita_realize(_poly(args.poly))
        else:
            K = realize_ideal(_ideal(args.ideal))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return format_knot(K)


def cmd_det(args) -> str:
    return f"{determinant(_knot(args.file))}\n"


def cmd_colorings(args) -> str:
    try:
        return f"{colorings_count(_knot(args.file), args.p)}\n"
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_report(args) -> str:
    r = report(_knot(args.file))
    return (r.to_json() if args.json else r.to_text()) + "\n"


def cmd_compare(args) -> str:
    return f"{distinguish(_knot(args.a), _knot(args.b))}\n"


def cmd_ribbon(args) -> str:
    return f"{ribbon_compatible(_knot(args.a), _knot(args.b))}\n"


def cmd_basis(args) -> str:
    Ks = [_knot(f) for f in args.files]
    return independence_certificate(Ks).to_text([K.name for K in Ks]) + "\n"


def cmd_graph(args) -> str:
    Ks = [_knot(f) for f in args.files]
    if args.dot:
        return graph_dot(Ks)
    lines = []
    for K0 in Ks:
        for K1 in Ks:
            if K0 is not K1:
                res = ribbon_compatible(K0, K1)
                if res.compatible:
                    lines.append(f"{K0.name} -> {K1.name}: {res.witness}")
    return "".join(line + "\n" for line in lines)


def cmd_hilbert(args) -> str:
    m = _ideal(args.ideal)
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    try:
        values = [hilbert_function(m, n) for n in range(args.max_n + 1)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return " ".join(map(str, values)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="alexideal", description="Alexander ideals of surface knots.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ideal", help="Alexander (or k-th elementary) ideal")
    p.add_argument("file")
    p.add_argument("--elementary", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("knot", help="built-in knot constructors")
    kind = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    tb = kind.add_parser("two-bridge", help="2-bridge knot b(p, q)")
    tb.add_argument("p", type=int)
    tb.add_argument("q", type=int)
    tb.set_defaults(func=cmd_knot)

    p = sub.add_parser("twist-spin", help="n-twist spin of a classical knot")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_twist_spin)

    p = sub.add_parser("sum", help="connected sum")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("realize", help="ribbon knot with a given ideal")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--ideal")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("det", help="determinant")
    p.add_argument("file")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("colorings", help="number of Fox p-colorings")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("report", help="obstruction report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("compare", help="try to distinguish two knots up to 0-concordance")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("ribbon-compatible", help="ideal-level ribbon concordance check A -> B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_ribbon)

    p = sub.add_parser("basis", help="independence certificate for maximal ideals")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("graph", help="ribbon compatibility graph")
    p.add_argument("files", nargs="+")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("hilbert", help="Hilbert function of a maximal ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_hilbert)
    return ap


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run one command; return ``(exit code, stdout, stderr)``."""
    ap = build_parser()
    err = []
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse already wrote its own message
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), "", ""
    try:
        return 0, args.func(args), ""
    except _ParseFailure as exc:
        err.append(str(exc))
        code = EXIT_PARSE
    except ResourceBoundExceeded as exc:
        err.append(f"resource bound exceeded: {exc.bound} ({exc})")
        code = EXIT_BOUND
    except (UsageError, ValueError) as exc:
        err.append(f"error: {exc}")
        code = EXIT_USAGE
    return code, "", "".join(line + "\n" for line in err)


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
