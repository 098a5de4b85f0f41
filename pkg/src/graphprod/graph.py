"""Graph product specifications: nodes, independence, generator bindings.

A spec file is line based (``#`` starts a comment)::

    node <name> z | cyclic <n> | finite <k> | free <r>
    table <name> <k*k indices>           # required iff finite
    edge <name1> <name2>                 # one independence pair
    gen <symbol> <node> <literal>        # inverses declared explicitly
    order <sym1> <sym2> ...              # shortlex order within each node

Node order is the order of ``node`` lines.  The generating alphabet is
ordered node-major: every symbol of an earlier node precedes every symbol
of a later one; within a node the ``order`` line decides, falling back to
declaration order.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    GraphProductError,
    InvalidGenerator,
    InvalidIndependence,
    SpecParseError,
    UnknownNode,
)
from .nodegroups import FiniteCayley, NodeGroup, make_group


class GraphProduct:
    """The data ``(L, I; (G_node))`` plus derived relations.

    Instances are immutable after construction and hash by identity, which
    lets the word-problem caches key on them.
    """

    def __init__(self, nodes: Sequence[tuple[str, NodeGroup]], independence: Iterable[tuple[str, str]] = ()):
        self.nodes: tuple[str, ...] = tuple(name for name, _ in nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise SpecParseError("duplicate node name")
        self.groups: dict[str, NodeGroup] = dict(nodes)
        self._rank = {name: i for i, name in enumerate(self.nodes)}

        pairs = set()
        for a, b in independence:
            for x in (a, b):
                if x not in self._rank:
                    raise UnknownNode(x)
            if a == b:
                raise InvalidIndependence(f"self-loop on {a!r}: independence must be irreflexive")
            pairs.add(frozenset((a, b)))
        self.independence: frozenset[frozenset[str]] = frozenset(pairs)
        self.dependence: frozenset[tuple[str, str]] = frozenset(
            (a, b) for a in self.nodes for b in self.nodes if frozenset((a, b)) not in pairs
        )
        self._links = {
            b: tuple(a for a in self.nodes if frozenset((a, b)) in pairs) for b in self.nodes
        }

        self.bindings: dict[str, tuple[str, object]] = {}
        self.symbol_order: list[str] = []
        for name in self.nodes:
            for sym, elt in self.groups[name].generators:
                if sym in self.bindings:
                    raise InvalidGenerator(f"symbol {sym!r} bound to two nodes")
                if ":" in sym or not sym or any(c.isspace() for c in sym):
                    raise InvalidGenerator(f"bad generator symbol {sym!r}")
                self.bindings[sym] = (name, elt)
                self.symbol_order.append(sym)
        self._symbol_rank = {s: i for i, s in enumerate(self.symbol_order)}
        self._induced: dict[tuple[str, ...], GraphProduct] = {}

    def __repr__(self):
        edges = sorted(tuple(sorted(p, key=self.rank)) for p in self.independence)
        return f"GraphProduct(nodes={list(self.nodes)}, I={edges})"

    def rank(self, node: str) -> int:
        try:
            return self._rank[node]
        except KeyError:
            raise UnknownNode(node) from None

    def symbol_rank(self, symbol: str) -> int:
        return self._symbol_rank[symbol]

    def independent(self, a: str, b: str) -> bool:
        return a != b and frozenset((a, b)) in self.independence

    def dependent(self, a: str, b: str) -> bool:
        return (a, b) in self.dependence

    def link(self, node: str) -> tuple[str, ...]:
        """Nodes independent of ``node``, in node order."""
        self.rank(node)
        return self._links[node]

    @property
    def is_finite(self) -> bool:
        """True iff the graph product is a direct product of finite groups."""
        complete = all(self.independent(a, b) for a in self.nodes for b in self.nodes if a != b)
        return complete and all(g.is_finite for g in self.groups.values())

    def induced(self, subset: Iterable[str]) -> GraphProduct:
        """Sub-spec on ``subset`` with the restricted independence relation."""
        keep = set(subset)
        for x in keep:
            self.rank(x)
        key = tuple(n for n in self.nodes if n in keep)
        if key not in self._induced:
            edges = [tuple(p) for p in self.independence if p <= keep]
            self._induced[key] = GraphProduct([(n, self.groups[n]) for n in key], edges)
        return self._induced[key]


@dataclass(frozen=True)
class Decomposition:
    """``G = P *_A (A x B)`` obtained by removing the base node."""

    base: str
    P: GraphProduct
    A: tuple[str, ...]
    B: NodeGroup


def decompose(spec: GraphProduct, base: str) -> Decomposition:
    spec.rank(base)
    rest = [n for n in spec.nodes if n != base]
    return Decomposition(base, spec.induced(rest), spec.link(base), spec.groups[base])


def connected_components(spec: GraphProduct, subset: Iterable[str]) -> list[tuple[str, ...]]:
    """Components of ``subset`` in the dependence graph ``(L, D)``.

    Each component is sorted by node order; components are ordered by
    their least node.
    """
    remaining = sorted(set(subset), key=spec.rank)
    seen: set[str] = set()
    out = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in remaining:
                if b not in comp and spec.dependent(a, b):
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        out.append(tuple(sorted(comp, key=spec.rank)))
    return out


def parse_spec(text: str) -> GraphProduct:
    """Parse and validate spec-file text."""
    kinds: dict[str, tuple[str, object]] = {}
    node_list: list[str] = []
    tables: dict[str, list[int]] = {}
    edges: list[tuple[str, str]] = []
    gens: list[tuple[int, str, str, str]] = []
    order: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()

        def fail(msg):
            raise SpecParseError(f"line {lineno}: {msg}: {raw.strip()!r}")

        if head == "node":
            if len(args) < 2:
                fail("expected 'node <name> <kind> [param]'")
            name, kind, *param = args
            if name in kinds:
                fail(f"node {name!r} declared twice")
            if kind == "z":
                if param:
                    fail("kind z takes no parameter")
                kinds[name] = ("z", None)
            elif kind in ("cyclic", "finite", "free"):
                if len(param) != 1 or not param[0].isdigit():
                    fail(f"kind {kind} needs one positive integer")
                kinds[name] = (kind, int(param[0]))
            else:
                fail(f"unknown kind {kind!r}")
            node_list.append(name)
        elif head == "table":
            if not args:
                fail("expected 'table <name> <entries>'")
            try:
                tables[args[0]] = [int(a) for a in args[1:]]
            except ValueError:
                fail("table entries must be integers")
        elif head == "edge":
            if len(args) != 2:
                fail("expected 'edge <name1> <name2>'")
            edges.append((args[0], args[1]))
        elif head == "gen":
            if len(args) != 3:
                fail("expected 'gen <symbol> <node> <literal>'")
            gens.append((lineno, *args))
        elif head == "order":
            order.extend(args)
        else:
            fail(f"unknown directive {head!r}")

    for name in tables:
        if name not in kinds or kinds[name][0] != "finite":
            raise SpecParseError(f"table given for non-finite node {name!r}")

    groups = []
    per_node: dict[str, list[tuple[str, str]]] = {n: [] for n in node_list}
    for lineno, sym, node, literal in gens:
        if node not in per_node:
            raise UnknownNode(f"line {lineno}: generator {sym!r} on unknown node {node!r}")
        per_node[node].append((sym, literal))
    declared = {sym for _, sym, _, _ in gens}
    for sym in order:
        if sym not in declared:
            raise SpecParseError(f"order mentions undeclared symbol {sym!r}")
    position = {s: i for i, s in enumerate(dict.fromkeys(order))}

    for name in node_list:
        kind, param = kinds[name]
        if kind == "finite":
            if name not in tables:
                raise SpecParseError(f"finite node {name!r} has no table line")
            k = param
            entries = tables[name]
            if len(entries) != k * k:
                raise SpecParseError(f"table for {name!r} needs {k * k} entries, got {len(entries)}")
            param = [entries[i * k:(i + 1) * k] for i in range(k)]
        bare = make_group(kind, param)
        syms = per_node[name]
        syms.sort(key=lambda sl: position.get(sl[0], len(position)))
        bound = [(sym, bare.parse_literal(lit)) for sym, lit in syms]
        groups.append((name, make_group(kind, param, bound)))

    return GraphProduct(groups, edges)


def load_spec(path) -> GraphProduct:
    return parse_spec(Path(path).read_text(encoding="utf-8"))


def format_spec(spec: GraphProduct) -> str:
    """Serialize back to spec-file text (round-trips through parse_spec)."""
    lines = []
    for name in spec.nodes:
        g = spec.groups[name]
        if g.kind == "z":
            lines.append(f"node {name} z")
        elif g.kind == "cyclic":
            lines.append(f"node {name} cyclic {g.modulus}")
        elif g.kind == "free":
            lines.append(f"node {name} free {g.rank}")
        elif isinstance(g, FiniteCayley):
            lines.append(f"node {name} finite {g.order}")
            lines.append(f"table {name} " + " ".join(str(int(v)) for v in g.table.ravel()))
        else:
            raise GraphProductError(f"cannot serialize node kind {g.kind!r}")
    for pair in sorted(tuple(sorted(p, key=spec.rank)) for p in spec.independence):
        lines.append("edge {} {}".format(*pair))
    for sym in spec.symbol_order:
        node, elt = spec.bindings[sym]
        lines.append(f"gen {sym} {node} {spec.groups[node].format_literal(elt)}")
    if spec.symbol_order:
        lines.append("order " + " ".join(spec.symbol_order))
    return "\n".join(lines) + "\n"
