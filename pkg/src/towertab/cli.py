"""
Command line front end.

Exit codes: 0 success / reduced, 1 negative verdict, 2 usage, parse or cap
error, 3 internal invariant breach.  Any positional argument list that is
exactly ``-`` is read from stdin instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import (
    CapExceededError,
    InvariantError,
    ParseError,
    TowerDiagram,
    format_diagram,
    format_tableau,
    format_word,
    parse_diagram,
    parse_tableau,
    parse_word,
)
from .enumeration import DEFAULT_CAP, enumerate_stt, shape_of
from .natural import natural_labelling, natural_word, natural_word_by_reading
from .perm import is_reduced_oracle, parse_permutation
from .read import NotStandardError, read
from .render import render_complete, render_diagram, render_flight, render_rothe, render_tableau
from .rothe import complete_tableau, format_rothe, rothe_diagram, rothify
from .slide import SRTerminated, sr_algorithm

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _text(tokens: Sequence[str]) -> str:
    if list(tokens) == ["-"]:
        return sys.stdin.read()
    return " ".join(tokens)


def _word(tokens: Sequence[str]):
    return parse_word(" ".join(_text(tokens).split()))


def _diagram(tokens: Sequence[str]) -> TowerDiagram:
    return parse_diagram(" ".join(_text(tokens).split()))


def _perm(tokens: Sequence[str]):
    return parse_permutation(" ".join(_text(tokens).split()))


def _emit(blocks: list[tuple[str | None, str]], fmt: str) -> None:
    """Write titled multi-line blocks; ``lines`` puts each block on one line."""
    out = []
    for title, body in blocks:
        if fmt == "lines":
            flat = " / ".join(body.splitlines())
            out.append(f"{title}: {flat}\n" if title else flat + "\n")
        else:
            out.append(f"{title}:\n{body}" if title else body)
    sep = "" if fmt == "lines" else "\n"
    sys.stdout.write(sep.join(out))


def cmd_check(args) -> int:
    word = _word(args.word)
    result = sr_algorithm(word)
    by_sliding = not isinstance(result, SRTerminated)
    if by_sliding != is_reduced_oracle(word):
        print(
            f"internal error: sliding says {by_sliding}, inversion count disagrees",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    if by_sliding:
        print("REDUCED")
        return EXIT_OK
    print(f"NOT-REDUCED at index {result.index}")
    return EXIT_NEGATIVE


def cmd_sr(args) -> int:
    result = sr_algorithm(_word(args.word))
    if isinstance(result, SRTerminated):
        print(f"NOT-REDUCED at index {result.index}")
        return EXIT_NEGATIVE
    _emit([("S", format_tableau(result.sliding)), ("R", format_tableau(result.recording))], args.format)
    return EXIT_OK


def cmd_read(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    tableau = parse_tableau(text)
    try:
        word = read(tableau)
    except NotStandardError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NEGATIVE
    sys.stdout.write(format_word(word))
    return EXIT_OK


def cmd_shape(args) -> int:
    result = sr_algorithm(_word(args.word))
    if isinstance(result, SRTerminated):
        print(f"NOT-REDUCED at index {result.index}")
        return EXIT_NEGATIVE
    sys.stdout.write(format_diagram(result.shape))
    return EXIT_OK


def _shape_arg(args) -> TowerDiagram:
    if args.shape is not None:
        return _diagram(args.shape)
    return shape_of(_perm(args.perm))


def cmd_enumerate(args) -> int:
    shape = _shape_arg(args)
    tableaux = enumerate_stt(shape, cap=args.cap)
    blocks = [("shape", format_diagram(shape))]
    for k, t in enumerate(tableaux, start=1):
        blocks.append((f"tableau {k}", format_tableau(t)))
        blocks.append((f"word {k}", format_word(read(t))))
    blocks.append(("count", f"{len(tableaux)}\n"))
    _emit(blocks, args.format)
    return EXIT_OK


def cmd_natural(args) -> int:
    shape = _shape_arg(args)
    word = natural_word(shape)
    if word != natural_word_by_reading(shape):
        print("internal error: natural word closed form disagrees with reading", file=sys.stderr)
        return EXIT_INTERNAL
    _emit([("labelling", format_tableau(natural_labelling(shape))), ("word", format_word(word))], args.format)
    return EXIT_OK


def cmd_rothe(args) -> int:
    sys.stdout.write(format_rothe(rothe_diagram(_perm(args.perm))))
    return EXIT_OK


def cmd_rothify(args) -> int:
    p = _perm(args.perm)
    cells = rothify(p)
    if cells != rothe_diagram(p):
        print("internal error: Rothification differs from the Rothe diagram", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(format_rothe(cells))
    return EXIT_OK


def cmd_render(args) -> int:
    kind, values = args.kind, args.values
    if kind == "diagram":
        out = render_diagram(_diagram(values))
    elif kind == "tableau":
        path = values[0] if values else "-"
        text = sys.stdin.read() if path == "-" else open(path).read()
        out = render_tableau(parse_tableau(text))
    elif kind == "sr":
        result = sr_algorithm(_word(values))
        if isinstance(result, SRTerminated):
            print(f"NOT-REDUCED at index {result.index}")
            return EXIT_NEGATIVE
        out = "S:\n" + render_tableau(result.sliding) + "\nR:\n" + render_tableau(result.recording)
    elif kind == "flight":
        if args.cell is None:
            raise ParseError("render flight needs --cell COLUMN HEIGHT")
        d = _diagram(values)
        if tuple(args.cell) not in d:
            raise ParseError(f"cell {tuple(args.cell)} is not in the diagram")
        out = render_flight(d, tuple(args.cell))
    elif kind == "complete":
        out = render_complete(complete_tableau(_perm(values)))
    else:
        out = render_rothe(_perm(values))
    sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="towertab", description="Tower diagrams and reduced words.")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration limit (default %(default)s)")
    parser.add_argument("--format", choices=["plain", "lines"], default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a word for reducedness")
    p.add_argument("word", nargs="*")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sr", help="sliding and recording tableaux of a word")
    p.add_argument("word", nargs="*")
    p.set_defaults(func=cmd_sr)

    p = sub.add_parser("read", help="reading word of a standard tower tableau file")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_read)

    p = sub.add_parser("shape", help="tower diagram of a reduced word")
    p.add_argument("word", nargs="*")
    p.set_defaults(func=cmd_shape)

    for name, func, helptext in [
        ("enumerate", cmd_enumerate, "all standard tower tableaux and their reading words"),
        ("natural", cmd_natural, "natural labelling and natural word"),
    ]:
        p = sub.add_parser(name, help=helptext)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--shape", nargs="+", metavar="H")
        group.add_argument("--perm", nargs="+", metavar="P")
        p.set_defaults(func=func)

    p = sub.add_parser("rothe", help="Rothe diagram of a permutation")
    p.add_argument("perm", nargs="*")
    p.set_defaults(func=cmd_rothe)

    p = sub.add_parser("rothify", help="Rothe diagram recovered from the complete tower tableau")
    p.add_argument("perm", nargs="*")
    p.set_defaults(func=cmd_rothify)

    p = sub.add_parser("render", help="ASCII picture of an object")
    p.add_argument("kind", choices=["diagram", "tableau", "sr", "flight", "complete", "rothe"])
    p.add_argument("values", nargs="*")
    p.add_argument("--cell", nargs=2, type=int, metavar=("COLUMN", "HEIGHT"))
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
