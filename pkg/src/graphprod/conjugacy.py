"""Conjugacy in graph products.

The decision procedure:

1. reduce both words;
2. replace each by a cyclically reduced conjugate;
3. require equal alphabets and split them into connected components of
   the dependence graph, deciding each component in its own sub-product;
4. a single-node component is a single letter, decided in the node group;
5. otherwise conjugacy coincides with the transposition closure, which is
   a pattern-matching question: ``p u q == v^|L|`` as traces.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CrossCheckError, NotCyclicallyReduced, NotReduced
from .graph import GraphProduct, connected_components
from .traces import (
    Decider,
    build_dependence_graph,
    factor_match,
    is_reduced,
    linearize,
    normal_form,
    reduce_graph,
)
from .words import Word, alph, node_lengths, project


def is_cyclically_reduced(spec: GraphProduct, w) -> bool:
    """No minimal and maximal vertex that differ but share a node."""
    w = tuple(w)
    if not is_reduced(spec, w):
        raise NotReduced("cyclic reducedness is only defined for reduced words")
    g = build_dependence_graph(spec, w)
    maxima = g.maximal()
    return not any(i != j and w[i].node == w[j].node for i in g.minimal() for j in maxima)


@dataclass
class CyclicForm:
    """``u == p r m s p^-1`` with ``core = m [s r]`` cyclically reduced.

    The per-node counts satisfy ``2n - k = 2 p + eps`` where ``n`` counts
    letters of u and ``k`` letters of the reduced square.
    """

    p: Word
    r: Word
    m: Word
    s: Word
    core: Word
    n: dict = field(default_factory=dict)
    k: dict = field(default_factory=dict)
    p_len: dict = field(default_factory=dict)
    eps: dict = field(default_factory=dict)
    m_len: dict = field(default_factory=dict)


def _reduce(spec, w, decider):
    return linearize(spec, normal_form(spec, w, decider))


def cyclic_form(spec: GraphProduct, u, decider: Decider | None = None) -> CyclicForm:
    """Locate ``p, r, m, s`` inside the reduced square of ``u``.

    The square ``u u`` is reduced with one restriction: a vertex never
    merges with its own copy.  Without it a letter that is both minimal and
    maximal in the core would fuse with its copy (and vanish entirely when
    it has order two), and the counting argument breaks down.  With it the
    reduced square is exactly ``p r m [s r] m s p^-1`` and each node's
    letters split as p | r | m | [sr] | m | s | p^-1.
    """
    uh = _reduce(spec, u, decider)
    size = len(uh)
    square = build_dependence_graph(spec, uh + uh)
    reduced = reduce_graph(spec, square, may_merge=lambda i, j: i % size != j % size).labels

    n = node_lengths(uh)
    k = node_lengths(reduced)
    p_len, eps, m_len = {}, {}, {}
    parts: dict[str, list[str]] = {}
    for node in spec.nodes:
        nn, kk = n[node], k[node]
        e = (2 * nn - kk) % 2
        pp = (2 * nn - kk - e) // 2
        mm = nn - 2 * pp - 2 * e
        if pp < 0 or mm < 0 or kk != 2 * pp + 2 * mm + 3 * e:
            raise CrossCheckError(f"inconsistent counts at {node!r}: n={nn}, k={kk}")
        p_len[node], eps[node], m_len[node] = pp, e, mm
        parts[node] = ["p"] * pp + ["r"] * e + ["m"] * mm + ["c"] * e + ["m2"] * mm + ["s"] * e + ["q"] * pp

    seen = dict.fromkeys(spec.nodes, 0)
    tag = []
    for a in reduced:
        tag.append(parts[a.node][seen[a.node]])
        seen[a.node] += 1

    def pick(*tags):
        return tuple(a for a, t in zip(reduced, tag) if t in tags)

    # core = m [s r]: the vertices strictly after p r and up to the merged
    # letters, i.e. alpha-indices p+eps < i <= k - p - eps - m.
    return CyclicForm(
        p=pick("p"), r=pick("r"), m=pick("m"), s=pick("s"), core=pick("m", "c"),
        n={a: n[a] for a in spec.nodes}, k={a: k[a] for a in spec.nodes},
        p_len=p_len, eps=eps, m_len=m_len,
    )


def cyclically_reduce(spec: GraphProduct, u, decider: Decider | None = None) -> Word:
    """A cyclically reduced word conjugate to ``u``."""
    return cyclic_form(spec, u, decider).core


def _require_cyclically_reduced(spec, w):
    try:
        ok = is_cyclically_reduced(spec, w)
    except NotReduced:
        ok = False
    if not ok:
        raise NotCyclicallyReduced("transposition is only decided for cyclically reduced words")


def transposition_equiv(spec: GraphProduct, u, v, num_nodes: int | None = None) -> bool:
    """``u`` and ``v`` related by a chain of transpositions ``rs <-> sr``.

    Equal letter counts per node and ``v^|L|`` containing ``u`` as a
    factor.  ``num_nodes`` overrides ``|L|`` when called on a sub-product.
    """
    u, v = tuple(u), tuple(v)
    _require_cyclically_reduced(spec, u)
    _require_cyclically_reduced(spec, v)
    if node_lengths(u) != node_lengths(v):
        return False
    power = num_nodes if num_nodes is not None else len(spec.nodes)
    return factor_match(spec, u, v * max(power, 1))


def conjugate(spec: GraphProduct, u, v, decider: Decider | None = None) -> bool:
    num_nodes = len(spec.nodes)
    x = cyclically_reduce(spec, _reduce(spec, u, decider), decider)
    y = cyclically_reduce(spec, _reduce(spec, v, decider), decider)
    if alph(x) != alph(y):
        return False
    for comp in connected_components(spec, alph(x)):
        sub = spec.induced(comp)
        xc, yc = project(spec, x, comp), project(spec, y, comp)
        if len(comp) == 1:
            (a,), (b,) = xc, yc
            if not spec.groups[comp[0]].is_conjugate(a.element, b.element):
                return False
        elif not transposition_equiv(sub, xc, yc, num_nodes):
            return False
    return True
