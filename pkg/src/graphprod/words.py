"""Letters and words over the graph-product alphabet.

A letter is a non-identity node-group element tagged with its node.  A
word is a plain tuple of letters; nothing here reduces anything except
:func:`bracket`, which multiplies runs of same-node generators.
"""
from __future__ import annotations

from collections import Counter
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import InvalidElement, InvalidGenerator, UnknownNode, WordParseError
from .graph import GraphProduct


class Letter(NamedTuple):
    node: str
    element: Hashable


Word = tuple  # tuple[Letter, ...]


def make_letter(spec: GraphProduct, node: str, element) -> Letter:
    if node not in spec.groups:
        raise UnknownNode(node)
    g = spec.groups[node]
    element = g.validate(element)
    if g.is_identity(element):
        raise InvalidElement(f"letters are non-identity elements; got identity of {node!r}")
    return Letter(node, element)


def check_word(spec: GraphProduct, w: Iterable) -> Word:
    return tuple(make_letter(spec, a.node, a.element) for a in w)


def bracket(spec: GraphProduct, symbols: Sequence[str]) -> Word:
    """Multiply maximal runs of same-node generators into single letters."""
    out: list[Letter] = []
    run_node = None
    acc = None
    for sym in list(symbols) + [None]:
        if sym is not None and sym not in spec.bindings:
            raise InvalidGenerator(f"unknown generator symbol {sym!r}")
        node = spec.bindings[sym][0] if sym is not None else None
        if node != run_node and run_node is not None:
            if not spec.groups[run_node].is_identity(acc):
                out.append(Letter(run_node, acc))
            acc = None
        if sym is None:
            break
        g = spec.groups[node]
        acc = g.multiply(g.identity if acc is None else acc, spec.bindings[sym][1])
        run_node = node
    return tuple(out)


def parse_word(spec: GraphProduct, text: str) -> Word:
    """Parse whitespace-separated generator symbols and ``node:literal`` tokens.

    Runs of generator symbols are bracketed; explicit ``node:literal``
    tokens stay separate letters.  ``1`` or an empty string is the empty word.
    """
    out: list[Letter] = []
    run: list[str] = []
    tokens = text.split()
    if tokens == ["1"]:
        return ()
    for tok in tokens:
        if ":" in tok:
            out.extend(bracket(spec, run))
            run = []
            node, _, lit = tok.partition(":")
            if node not in spec.groups:
                raise WordParseError(f"unknown node {node!r} in token {tok!r}")
            g = spec.groups[node]
            try:
                elt = g.parse_literal(lit)
            except InvalidElement as exc:
                raise WordParseError(str(exc)) from None
            if not g.is_identity(elt):
                out.append(Letter(node, elt))
        elif tok in spec.bindings:
            run.append(tok)
        else:
            raise WordParseError(f"unknown generator symbol {tok!r}")
    out.extend(bracket(spec, run))
    return tuple(out)


def letter_symbols(spec: GraphProduct, a: Letter) -> list[str]:
    return spec.groups[a.node].shortlex(a.element)


def format_word(spec: GraphProduct, w: Sequence[Letter], expand: bool = True) -> str:
    """Render a word in the parseable word syntax.

    With ``expand`` each letter becomes its shortlex generator word; this
    round-trips through :func:`parse_word` only when no two adjacent
    letters share a node (true for reduced words).  Otherwise letters are
    written as ``node:literal`` tokens.
    """
    if not w:
        return "1"
    parts = []
    for a in w:
        g = spec.groups[a.node]
        if expand and g.generators:
            parts.append(" ".join(g.shortlex(a.element)))
        else:
            parts.append(f"{a.node}:{g.format_literal(a.element)}")
    return " ".join(parts)


def invert(spec: GraphProduct, w: Sequence[Letter]) -> Word:
    return tuple(Letter(a.node, spec.groups[a.node].invert(a.element)) for a in reversed(w))


def project(spec: GraphProduct, w: Sequence[Letter], nodes: Iterable[str]) -> Word:
    """Subsequence of letters on ``nodes``: the retraction onto that sub-product."""
    keep = set(nodes)
    return tuple(a for a in w if a.node in keep)


def alph(w: Sequence[Letter]) -> frozenset[str]:
    return frozenset(a.node for a in w)


def node_lengths(w: Sequence[Letter]) -> Counter:
    return Counter(a.node for a in w)


def alpha_length(w: Sequence[Letter], node: str) -> int:
    return sum(1 for a in w if a.node == node)


def canonical(spec: GraphProduct, w: Sequence[Letter]) -> Word:
    """Lexicographic trace normal form: repeatedly emit the minimal letter
    with least node.

    Two words give the same result iff they are trace equivalent, so this
    is a hashable key for a dependence graph.  Minimal letters have
    pairwise independent (hence distinct) nodes, so there are no ties.
    """
    rest = list(w)
    out = []
    while rest:
        best = None
        seen: list[str] = []
        for i, a in enumerate(rest):
            if not any(spec.dependent(b, a.node) for b in seen):
                if best is None or spec.rank(a.node) < spec.rank(rest[best].node):
                    best = i
            seen.append(a.node)
        out.append(rest.pop(best))
    return tuple(out)
