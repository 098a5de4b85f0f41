"""Dependence graphs and normal forms for graph-product words.

The dependence graph of ``w = a_1 ... a_n`` has vertices ``0..n-1``
labelled by the letters and an arc ``i -> j`` for ``i < j`` whenever the
nodes of ``a_i`` and ``a_j`` are dependent.  Its Hasse diagram keeps only
the arcs not implied by longer paths.

Two routes to the reduced form are implemented:

* :func:`reduce_graph` merges same-node Hasse neighbours until none are
  left.  It is confluent, so the pick order does not matter.
* :func:`normal_form` runs one alpha-reduction per node, deciding each
  merge with a word-problem call (by default the amalgam decomposition),
  then builds the graph of the result.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, NamedTuple, Sequence

from .amalgam import wp_via_decomposition
from .graph import GraphProduct
from .words import Letter, Word, alpha_length, canonical, invert, letter_symbols, project

Decider = Callable[[GraphProduct, Word], bool]


@dataclass(frozen=True)
class DependenceGraph:
    labels: tuple
    arcs: frozenset
    hasse: frozenset

    def __len__(self):
        return len(self.labels)

    @property
    def word(self) -> Word:
        """The word read off in vertex order (one topological sorting)."""
        return self.labels

    def minimal(self) -> list[int]:
        has_in = {j for _, j in self.arcs}
        return [i for i in range(len(self.labels)) if i not in has_in]

    def maximal(self) -> list[int]:
        has_out = {i for i, _ in self.arcs}
        return [i for i in range(len(self.labels)) if i not in has_out]


def _successors(spec: GraphProduct, w: Sequence[Letter]) -> list[list[int]]:
    n = len(w)
    return [[j for j in range(i + 1, n) if spec.dependent(w[i].node, w[j].node)] for i in range(n)]


def _reach(succ: list[list[int]]) -> list[int]:
    """Bitmask of vertices reachable by a path of length >= 1."""
    n = len(succ)
    reach = [0] * n
    for i in range(n - 1, -1, -1):
        r = 0
        for j in succ[i]:
            r |= (1 << j) | reach[j]
        reach[i] = r
    return reach


def _hasse(succ: list[list[int]], reach: list[int]) -> list[tuple[int, int]]:
    out = []
    for i, js in enumerate(succ):
        via = 0
        for j in js:
            via |= reach[j]
        out.extend((i, j) for j in js if not via >> j & 1)
    return out


def build_dependence_graph(spec: GraphProduct, w: Sequence[Letter]) -> DependenceGraph:
    w = tuple(w)
    succ = _successors(spec, w)
    arcs = frozenset((i, j) for i, js in enumerate(succ) for j in js)
    return DependenceGraph(w, arcs, frozenset(_hasse(succ, _reach(succ))))


def is_reduced(spec: GraphProduct, w: Sequence[Letter]) -> bool:
    """No factor ``b u b'`` with b, b' on one node and u independent of it."""
    n = len(w)
    for i in range(n):
        beta = w[i].node
        for j in range(i + 1, n):
            if w[j].node == beta:
                return False
            if spec.dependent(beta, w[j].node):
                break
    return True


def _merge_candidates(spec: GraphProduct, w: Sequence[Letter]) -> list[tuple[int, int]]:
    succ = _successors(spec, w)
    return [(i, j) for i, j in _hasse(succ, _reach(succ)) if w[i].node == w[j].node]


def reduce_graph(
    spec: GraphProduct,
    g: DependenceGraph,
    rng: random.Random | None = None,
    may_merge: Callable[[int, int], bool] | None = None,
) -> DependenceGraph:
    """Rewriting on Hasse arcs between same-node labels.

    ``rng`` picks a random eligible arc each step (default: the first).
    ``may_merge(i, j)`` vetoes merges; indices refer to vertices of the
    input graph.
    """
    labels = list(g.labels)
    ids = list(range(len(labels)))
    while True:
        cands = _merge_candidates(spec, labels)
        if may_merge is not None:
            cands = [(i, j) for i, j in cands if may_merge(ids[i], ids[j])]
        if not cands:
            break
        i, j = rng.choice(cands) if rng is not None else cands[0]
        grp = spec.groups[labels[i].node]
        prod = grp.multiply(labels[i].element, labels[j].element)
        if grp.is_identity(prod):
            drop = (i, j)
        else:
            labels[i] = Letter(labels[i].node, prod)
            drop = (j,)
        for k in sorted(drop, reverse=True):
            del labels[k]
            del ids[k]
    return build_dependence_graph(spec, labels)


def reduce_word(spec: GraphProduct, w: Sequence[Letter], rng: random.Random | None = None) -> Word:
    """Reduced word for ``w`` by the graph rewriting."""
    return reduce_graph(spec, build_dependence_graph(spec, w), rng).labels


def rewriting_decider(spec: GraphProduct, w: Word) -> bool:
    return not reduce_word(spec, w)


class AlphaFactorization(NamedTuple):
    """``w = u_0 a_1 u_1 ... a_n u_n``: ``gaps`` has n+1 words, ``letters`` n."""

    gaps: tuple
    letters: tuple


def alpha_factorize(spec: GraphProduct, w: Sequence[Letter], node: str) -> AlphaFactorization:
    spec.rank(node)
    gaps: list[list[Letter]] = [[]]
    letters = []
    for a in w:
        if a.node == node:
            letters.append(a)
            gaps.append([])
        else:
            gaps[-1].append(a)
    return AlphaFactorization(tuple(map(tuple, gaps)), tuple(letters))


def alpha_reduce(spec: GraphProduct, w: Sequence[Letter], node: str, decider: Decider | None = None) -> Word:
    """One left-to-right alpha-reduction pass for ``node``.

    At each stop ``i`` the block ``a_i u_i ... a_m u_m`` is replaced by
    ``[a_i ... a_m] u_i ... u_m`` for the largest ``m`` at which both
    sides are equal in the group.
    """
    decider = decider or wp_via_decomposition
    gaps, letters = alpha_factorize(spec, w, node)
    n = len(letters)
    if n <= 1:
        return tuple(w)
    grp = spec.groups[node]

    def holds(i, m):
        lhs = []
        for k in range(i, m + 1):
            lhs.append(letters[k])
            lhs.extend(gaps[k + 1])
        prod = grp.product(a.element for a in letters[i:m + 1])
        rhs = [] if grp.is_identity(prod) else [Letter(node, prod)]
        for k in range(i, m + 1):
            rhs.extend(gaps[k + 1])
        return decider(spec, tuple(lhs) + invert(spec, rhs))

    out = list(gaps[0])
    i = 0
    while i < n:
        # The set of valid m need not be an interval (a c a fails where
        # a c a a and a c a a c a hold), so search down from the top.
        m = next((k for k in range(n - 1, i, -1) if holds(i, k)), i)
        prod = grp.product(a.element for a in letters[i:m + 1])
        if not grp.is_identity(prod):
            out.append(Letter(node, prod))
        for k in range(i, m + 1):
            out.extend(gaps[k + 1])
        i = m + 1
    return tuple(out)


def alpha_rounds(spec: GraphProduct, w: Sequence[Letter], decider: Decider | None = None) -> tuple[Word, int]:
    """One alpha-reduction per node in node order, then verification passes.

    Returns the reduced word and the number of verification passes that
    still changed some alpha-length (0 when one round per node suffices).
    """
    w = tuple(w)
    for node in spec.nodes:
        w = alpha_reduce(spec, w, node, decider)
    extra = 0
    while True:
        changed = False
        for node in spec.nodes:
            before = alpha_length(w, node)
            w = alpha_reduce(spec, w, node, decider)
            changed |= alpha_length(w, node) != before
        if not changed:
            return w, extra
        extra += 1


def normal_form(spec: GraphProduct, w: Sequence[Letter], decider: Decider | None = None) -> DependenceGraph:
    return build_dependence_graph(spec, alpha_rounds(spec, w, decider)[0])


def linearize(spec: GraphProduct, g: DependenceGraph) -> Word:
    """Canonical linearization: least-node minimal vertex first."""
    return canonical(spec, g.labels)


def trace_equal(spec: GraphProduct, u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """``u`` and ``v`` have isomorphic dependence graphs.

    Decided by the projection criterion: equal letter counts per node and
    equal subsequences on every dependent pair of nodes.
    """
    nodes = {a.node for a in u} | {a.node for a in v}
    for a in nodes:
        for b in nodes:
            if spec.rank(a) <= spec.rank(b) and spec.dependent(a, b):
                pu = [x for x in u if x.node in (a, b)]
                pv = [x for x in v if x.node in (a, b)]
                if pu != pv:
                    return False
    return True


def word_problem(spec: GraphProduct, w: Sequence[Letter], decider: Decider | None = None) -> bool:
    return len(normal_form(spec, w, decider)) == 0


def membership(spec: GraphProduct, w: Sequence[Letter], nodes, decider: Decider | None = None) -> bool:
    """Is ``w`` in the sub-product on ``nodes``?  Tested as ``w = pi(w)``."""
    w = tuple(w)
    return word_problem(spec, w + invert(spec, project(spec, w, nodes)), decider)


def shortlex_nf(spec: GraphProduct, w: Sequence[Letter], decider: Decider | None = None) -> list[str]:
    """Shortlex-least generator word for the element of ``w``."""
    out: list[str] = []
    for a in linearize(spec, normal_form(spec, w, decider)):
        out.extend(letter_symbols(spec, a))
    return out


def factor_match(spec: GraphProduct, p: Sequence[Letter], t: Sequence[Letter]) -> bool:
    """Do words x, y exist with ``t`` trace equivalent to ``x p y``?

    Places the minimal vertices of D(p) into D(t), keeps what is reachable
    from the placement, does the same backwards from a placement of the
    maximal vertices, and compares what is left with p.
    """
    p, t = tuple(p), tuple(t)
    if not p:
        return True
    cp, ct = Counter(a.node for a in p), Counter(a.node for a in t)
    if any(cp[a] > ct[a] for a in cp):
        return False
    gp = build_dependence_graph(spec, p)
    succ = _successors(spec, t)
    fwd = _reach(succ)
    n = len(t)
    pred: list[list[int]] = [[] for _ in range(n)]
    for i, js in enumerate(succ):
        for j in js:
            pred[j].append(i)
    bwd = [0] * n
    for j in range(n):
        r = 0
        for i in pred[j]:
            r |= (1 << i) | bwd[i]
        bwd[j] = r

    def placements(targets, allowed):
        pools = [[i for i in range(n) if allowed >> i & 1 and t[i] == p[v]] for v in targets]
        out = []

        def rec(k, used):
            if k == len(pools):
                out.append(used)
                return
            for i in pools[k]:
                if i not in used:
                    rec(k + 1, used + (i,))

        rec(0, ())
        return out

    everything = (1 << n) - 1
    for mins in placements(gp.minimal(), everything):
        up = 0
        for i in mins:
            up |= (1 << i) | fwd[i]
        for maxs in placements(gp.maximal(), up):
            down = 0
            for i in maxs:
                down |= (1 << i) | bwd[i]
            keep = up & down
            if bin(keep).count("1") != len(p):
                continue
            if trace_equal(spec, [t[i] for i in range(n) if keep >> i & 1], p):
                return True
    return False


def isomorphic_brute(spec: GraphProduct, u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """Labelled-graph isomorphism by trying every vertex bijection.

    Only for tiny words; used to validate :func:`trace_equal`.
    """
    gu, gv = build_dependence_graph(spec, u), build_dependence_graph(spec, v)
    if len(gu) != len(gv):
        return False
    n = len(gu)
    for perm in permutations(range(n)):
        if all(gu.labels[i] == gv.labels[perm[i]] for i in range(n)) and {
            (perm[i], perm[j]) for i, j in gu.arcs
        } == set(gv.arcs):
            return True
    return False


def emit_dot(spec: GraphProduct, g: DependenceGraph, full: bool = False) -> str:
    """DOT text for a dependence graph; Hasse arcs only unless ``full``."""
    lines = ["digraph {"]
    for i, a in enumerate(g.labels):
        label = f"{a.node}:{' '.join(letter_symbols(spec, a))}" if spec.groups[a.node].generators else (
            f"{a.node}:{spec.groups[a.node].format_literal(a.element)}"
        )
        lines.append(f'  v{i + 1} [label="{label}"];')
    for i, j in sorted(g.arcs if full else g.hasse):
        lines.append(f"  v{i + 1} -> v{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
