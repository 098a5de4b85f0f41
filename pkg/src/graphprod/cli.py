"""Command-line front end.

    graphprod wp SPEC WORD
    graphprod nf SPEC WORD
    graphprod shortlex SPEC WORD
    graphprod geodesic SPEC WORD
    graphprod cycred SPEC WORD
    graphprod conj SPEC WORD1 WORD2
    graphprod amalgam-wp [--base NODE] SPEC WORD
    graphprod dot [--full] [--reduced] SPEC WORD

Exit codes: 0 yes / success, 1 no, 2 bad input, 3 internal cross-check failure.
"""
from __future__ import annotations

import argparse
import sys

from .amalgam import wp_via_decomposition
from .conjugacy import conjugate, cyclically_reduce
from .errors import CrossCheckError, GraphProductError
from .graph import load_spec
from .oracles import brute_conjugate, naive_normal_form
from .traces import build_dependence_graph, emit_dot, linearize, normal_form, shortlex_nf, word_problem
from .words import format_word, parse_word


def _verdict(ok: bool, yes: str, no: str) -> tuple[str, int]:
    return (yes, 0) if ok else (no, 1)


def _run(args) -> tuple[str, int]:
    spec = load_spec(args.spec)
    words = [parse_word(spec, w) for w in args.words]
    w = words[0]
    cmd = args.command
    if cmd == "wp":
        if args.oracle:
            return _verdict(not naive_normal_form(spec, w), "TRIVIAL", "NONTRIVIAL")
        return _verdict(word_problem(spec, w), "TRIVIAL", "NONTRIVIAL")
    if cmd == "amalgam-wp":
        return _verdict(wp_via_decomposition(spec, w, args.base), "TRIVIAL", "NONTRIVIAL")
    if cmd == "nf":
        if args.oracle:
            return format_word(spec, naive_normal_form(spec, w)), 0
        return format_word(spec, linearize(spec, normal_form(spec, w))), 0
    if cmd == "shortlex":
        return " ".join(shortlex_nf(spec, w)) or "1", 0
    if cmd == "geodesic":
        sl = shortlex_nf(spec, w)
        return f"{' '.join(sl) or '1'}\nlength {len(sl)}", 0
    if cmd == "cycred":
        return format_word(spec, cyclically_reduce(spec, w)), 0
    if cmd == "conj":
        if args.oracle:
            return _verdict(brute_conjugate(spec, w, words[1]), "CONJUGATE", "NOT-CONJUGATE")
        return _verdict(conjugate(spec, w, words[1]), "CONJUGATE", "NOT-CONJUGATE")
    if cmd == "dot":
        g = normal_form(spec, w) if args.reduced else build_dependence_graph(spec, w)
        return emit_dot(spec, g, full=args.full).rstrip("\n"), 0
    raise AssertionError(cmd)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphprod", description="Computations in graph products of groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, nwords, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help="spec file")
        p.add_argument("words", nargs=nwords, metavar="WORD", help="word in generator syntax, e.g. 'a b a-'")
        # Route the query through the brute-force oracle (debugging aid).
        p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
        return p

    add("wp", 1, "decide whether a word is trivial")
    add("nf", 1, "reduced normal form")
    add("shortlex", 1, "shortlex normal form")
    add("geodesic", 1, "a geodesic and its length")
    add("cycred", 1, "cyclically reduced conjugate")
    add("conj", 2, "decide conjugacy of two words")
    p = add("amalgam-wp", 1, "word problem through amalgam decomposition")
    p.add_argument("--base", default=None, help="node to split off (default: last node)")
    p = add("dot", 1, "dependence graph of a word in DOT")
    p.add_argument("--full", action="store_true", help="all arcs, not just the Hasse diagram")
    p.add_argument("--reduced", action="store_true", help="draw the graph of the reduced word instead")
    return parser


def run(argv: list[str] | None = None) -> tuple[str, str, int]:
    """Run one invocation; returns ``(stdout, stderr, exit code)``."""
    args = build_parser().parse_args(argv)
    try:
        out, code = _run(args)
    except CrossCheckError as exc:
        return "", f"graphprod: internal cross-check failed: {exc}\n", 3
    except (GraphProductError, OSError) as exc:
        return "", f"graphprod: {type(exc).__name__}: {exc}\n", 2
    return out + "\n", "", code


def main(argv: list[str] | None = None) -> int:
    try:
        out, err, code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return 2 if exc.code else 0
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
