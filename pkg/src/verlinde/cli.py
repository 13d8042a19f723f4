"""Command-line front end.

stdout carries data, stderr carries diagnostics.  Exit codes: 0 success,
1 domain error (the error class name is printed to stderr), 2 usage error
(argparse).  Output for a fixed argv is deterministic.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import charring, fusion, noncompact, steinberg
from .alcove import alcove_position, fusion_context
from .errors import VerlindeError
from .fusion import CharElement, FusionElement
from .rootsystem import Weight, from_type_string


def _fmt_weight(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def _fmt_element(a: FusionElement) -> str:
    if a.is_zero():
        return "0"
    return " + ".join(f"{c}*{_fmt_weight(w)}" for w, c in a.items())


def _parse_weight(text: str, rank: int, parser: argparse.ArgumentParser) -> Weight:
    try:
        labels = tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"cannot parse weight {text!r}: expected comma-separated integers")
    if len(labels) != rank:
        parser.error(f"weight {text!r} has {len(labels)} labels, expected {rank}")
    return labels


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*\s*)?\[([0-9,\s-]*)\]")


def _parse_char_expr(text: str, rank: int,
                     parser: argparse.ArgumentParser) -> CharElement:
    """Signed sums of bracketed weights, e.g. '[4]+[0]' or '2*[1,0]-[0,1]'."""
    pos = 0
    terms: list[tuple[Weight, int]] = []
    stripped = text.strip()
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if not m:
            parser.error(f"cannot parse expression {text!r} at {stripped[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        body = m.group(3).strip()
        labels = tuple(int(p) for p in body.split(",")) if body else ()
        if len(labels) != rank:
            parser.error(f"weight [{body}] has {len(labels)} labels, expected {rank}")
        terms.append((labels, sign * coeff))
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    if not terms:
        parser.error(f"empty expression {text!r}")
    return CharElement(terms)


def _note_level_zero(ell: int) -> None:
    if ell == 0:
        print("note: fusion level 0, the ring is trivial (Z * [0])", file=sys.stderr)


def _make_context(args, parser):
    rs = from_type_string(args.type)
    _note_level_zero(args.level)
    return fusion_context(rs, args.level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Exact fusion rings, their character-ring presentation, "
                    "and SL(2) trace-fiber classifiers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(p, with_level=True):
        p.add_argument("--type", required=True, metavar="T",
                       help="simple type string, e.g. A1, B3, g2")
        if with_level:
            p.add_argument("--level", required=True, type=int, metavar="L",
                           help="fusion level (non-negative integer)")

    p = sub.add_parser("weights", help="list the level-L basis weights")
    typed(p)

    p = sub.add_parser("fuse", help="fusion product of two basis weights")
    typed(p)
    p.add_argument("a", metavar="A", help="weight, comma-separated Dynkin labels")
    p.add_argument("b", metavar="B", help="weight, comma-separated Dynkin labels")

    p = sub.add_parser("table", help="full structure-constant table")
    typed(p)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("horn", help="support of the product of two conjugacy classes")
    typed(p)
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = sub.add_parser("dirac", help="Dirac induction (rho-shift) of a weight")
    p.add_argument("--type", required=True, metavar="T")
    p.add_argument("--twist", required=True, type=int, metavar="K",
                   help="twist level k (at least the dual Coxeter number)")
    p.add_argument("a", metavar="A")

    p = sub.add_parser("ideal", help="Verlinde-ideal membership of a character sum")
    typed(p)
    p.add_argument("expr", metavar="EXPR",
                   help="signed sum of bracketed weights, e.g. '[4]+[0]'; "
                        "prefix a leading minus with -- on the command line")

    p = sub.add_parser("smatrix", help="numerical S-matrix (9 decimal digits)")
    typed(p)

    p = sub.add_parser("steinberg", help="classify a trace fiber for SL(2)")
    p.add_argument("group", choices=("sl2r", "sl2c"))
    p.add_argument("--trace", required=True, metavar="R",
                   help="exact rational trace, e.g. 2 or -5/2")
    p.add_argument("--imag", default="0", metavar="S",
                   help="imaginary part (sl2c only), exact rational")

    p = sub.add_parser("alcove", help="alcove position of a basis weight")
    typed(p)
    p.add_argument("a", metavar="A")

    return parser


def _cmd_weights(args, parser) -> int:
    ctx = _make_context(args, parser)
    for w in ctx.basis:
        print(_fmt_weight(w))
    return 0


def _cmd_fuse(args, parser) -> int:
    ctx = _make_context(args, parser)
    a = _parse_weight(args.a, ctx.rs.rank, parser)
    b = _parse_weight(args.b, ctx.rs.rank, parser)
    out = fusion.fuse(ctx, fusion.sigma(ctx, a), fusion.sigma(ctx, b))
    print(_fmt_element(out))
    return 0


def _table_entries(ctx):
    # full ordered tensor, nonzero entries only, lexicographic in (a, b, c)
    n = len(ctx.basis)
    for i in range(n):
        for j in range(n):
            row = fusion._fuse_basis(ctx, ctx.basis[i], ctx.basis[j])
            for w in sorted(row, key=ctx.index.get):
                yield i, j, ctx.index[w], row[w]


def _cmd_table(args, parser) -> int:
    ctx = _make_context(args, parser)
    if args.format == "json":
        payload = {
            "type": ctx.rs.name,
            "level": ctx.fusion_level,
            "basis": [list(w) for w in ctx.basis],
            "constants": [{"a": a, "b": b, "c": c, "n": n}
                          for a, b, c, n in _table_entries(ctx)],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        print("a,b,c,n")
        for a, b, c, n in _table_entries(ctx):
            print(f"{a},{b},{c},{n}")
    else:
        for i, m1 in enumerate(ctx.basis):
            for m2 in ctx.basis[i:]:
                out = fusion.fuse(ctx, fusion.sigma(ctx, m1), fusion.sigma(ctx, m2))
                print(f"{_fmt_weight(m1)} * {_fmt_weight(m2)} = {_fmt_element(out)}")
    return 0


def _cmd_horn(args, parser) -> int:
    ctx = _make_context(args, parser)
    a = _parse_weight(args.a, ctx.rs.rank, parser)
    b = _parse_weight(args.b, ctx.rs.rank, parser)
    support = sorted(fusion.horn_support(ctx, a, b))
    print(" ".join(_fmt_weight(w) for w in support))
    return 0


def _cmd_dirac(args, parser) -> int:
    rs = from_type_string(args.type)
    a = _parse_weight(args.a, rs.rank, parser)
    elem = noncompact.dirac_induce(rs, args.twist, a)
    print(_fmt_weight(elem.regular_weight))
    print(f"parity: {elem.parity}")
    return 0


def _cmd_ideal(args, parser) -> int:
    ctx = _make_context(args, parser)
    x = _parse_char_expr(args.expr, ctx.rs.rank, parser)
    print("true" if charring.ideal_member(ctx, x) else "false")
    return 0


def _cmd_smatrix(args, parser) -> int:
    ctx = _make_context(args, parser)
    s = fusion.s_matrix(ctx)
    for row in s:
        print(" ".join(f"{z.real:.9f}{z.imag:+.9f}i" for z in row))
    return 0


def _cmd_steinberg(args, parser) -> int:
    trace = Fraction(args.trace)
    if args.group == "sl2c":
        desc = steinberg.classify_fiber_sl2c(trace, Fraction(args.imag))
    else:
        if Fraction(args.imag) != 0:
            parser.error("--imag applies to sl2c only")
        desc = steinberg.classify_fiber_sl2r(trace)
    print(f"group: {desc.group}")
    print(f"trace: {desc.trace_value}")
    for s in desc.strata:
        print(f"stratum: {s.name} | {s.kind} | {s.model}")
    if desc.fiber_model is not None:
        print(f"model: {desc.fiber_model}")
    if args.group == "sl2r":
        cover = sorted(steinberg.cover_member_sl2r(trace))
        print("cover: " + " ".join(cover))
    return 0


def _cmd_alcove(args, parser) -> int:
    ctx = _make_context(args, parser)
    a = _parse_weight(args.a, ctx.rs.rank, parser)
    pos = alcove_position(ctx, a)
    print("barycentric: " + " ".join(str(x) for x in pos.barycentric))
    walls = ",".join(str(i) for i in sorted(pos.walls)) if pos.walls else "none"
    print(f"walls: {walls}")
    print(f"stabilizer: {pos.stabilizer}")
    return 0


_COMMANDS = {
    "weights": _cmd_weights,
    "fuse": _cmd_fuse,
    "table": _cmd_table,
    "horn": _cmd_horn,
    "dirac": _cmd_dirac,
    "ideal": _cmd_ideal,
    "smatrix": _cmd_smatrix,
    "steinberg": _cmd_steinberg,
    "alcove": _cmd_alcove,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and execute one subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, parser)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    except VerlindeError as exc:
        message = str(exc)
        name = type(exc).__name__
        print(f"{name}: {message}" if message else name, file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        # bad rational literals and similar input-shape problems
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(run(sys.argv[1:]))
