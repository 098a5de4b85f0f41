"""Brute-force reference implementations used by the tests.

Nothing here touches dependence graphs, Hasse diagrams or alpha-rounds.
Words are reduced by local rewriting over the whole commutation class and
compared through :func:`graphprod.words.canonical`.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import BudgetExceeded, GraphProductError
from .graph import GraphProduct
from .words import Letter, Word, bracket, canonical, invert


@dataclass(frozen=True)
class OracleBudget:
    max_word_length: int = 12
    max_conjugator_length: int = 5
    max_states: int = 10**5

    def __post_init__(self):
        if min(self.max_word_length, self.max_conjugator_length, self.max_states) <= 0:
            raise GraphProductError("budget fields must be positive")


DEFAULT_BUDGET = OracleBudget()


def _swap(w: Word, i: int) -> Word:
    return w[:i] + (w[i + 1], w[i]) + w[i + 2:]


def naive_normal_form(spec: GraphProduct, w: Sequence[Letter], seed: int = 0,
                      budget: OracleBudget = DEFAULT_BUDGET) -> Word:
    """Reduce by swapping independent neighbours and multiplying equal-node ones.

    Each round searches the commutation class of the current word for an
    adjacent same-node pair and multiplies it; the search order is shuffled
    by ``seed``.  Stops when no word in the class has such a pair.
    """
    rng = random.Random(seed)
    w = tuple(w)
    states = 0
    while True:
        seen = {w}
        frontier = deque([w])
        hit = None
        while frontier:
            x = frontier.popleft()
            pairs = [i for i in range(len(x) - 1) if x[i].node == x[i + 1].node]
            if pairs:
                hit = (x, rng.choice(pairs))
                break
            swaps = [i for i in range(len(x) - 1) if spec.independent(x[i].node, x[i + 1].node)]
            rng.shuffle(swaps)
            for i in swaps:
                y = _swap(x, i)
                if y not in seen:
                    states += 1
                    if states > budget.max_states:
                        raise BudgetExceeded("commutation class search exceeded the state budget")
                    seen.add(y)
                    frontier.append(y)
        if hit is None:
            return w
        x, i = hit
        g = spec.groups[x[i].node]
        prod = g.multiply(x[i].element, x[i + 1].element)
        mid = () if g.is_identity(prod) else (Letter(x[i].node, prod),)
        w = x[:i] + mid + x[i + 2:]


class _Keyer:
    """Memoized ``word -> canonical reduced key`` for one spec."""

    def __init__(self, spec: GraphProduct, budget: OracleBudget):
        self.spec = spec
        self.budget = budget
        self.cache: dict[Word, Word] = {}

    def __call__(self, w: Sequence[Letter]) -> Word:
        w = tuple(w)
        if w not in self.cache:
            self.cache[w] = canonical(self.spec, naive_normal_form(self.spec, w, 0, self.budget))
        return self.cache[w]


@lru_cache(maxsize=64)
def _keyer(spec: GraphProduct, budget: OracleBudget) -> _Keyer:
    # Shared across calls so repeated oracle queries reuse reductions.
    return _Keyer(spec, budget)


def _conjugator_ball(spec: GraphProduct, key: _Keyer, radius: int | None, budget: OracleBudget):
    """Distinct elements within ``radius`` generators (all of them if None)."""
    gens = [bracket(spec, [s]) for s in spec.symbol_order]
    start = key(())
    seen = {start}
    layer = [start]
    yield start
    depth = 0
    while layer and (radius is None or depth < radius):
        depth += 1
        nxt = []
        for z in layer:
            for g in gens:
                y = key(z + g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > budget.max_states:
                        raise BudgetExceeded("conjugator enumeration exceeded the state budget")
                    nxt.append(y)
                    yield y
        layer = nxt


def brute_conjugate(spec: GraphProduct, u: Sequence[Letter], v: Sequence[Letter],
                    budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Search for ``z`` with ``z^-1 u z = v``.

    On finite specs every element is tried, so both answers are exact.
    Otherwise only ``True`` is authoritative.
    """
    key = _keyer(spec, budget)
    u, target = tuple(u), key(v)
    radius = None if spec.is_finite else budget.max_conjugator_length
    for z in _conjugator_ball(spec, key, radius, budget):
        if key(invert(spec, z) + u + z) == target:
            return True
    return False


def _ideals(spec: GraphProduct, w: Word):
    """Bitmasks of the downward-closed vertex sets of the dependence order."""
    n = len(w)
    below = [0] * n
    for j in range(n):
        for i in range(j):
            if spec.dependent(w[i].node, w[j].node):
                below[j] |= 1 << i | below[i]
    for mask in range(1 << n):
        if all(below[j] & ~mask == 0 for j in range(n) if mask >> j & 1):
            yield mask


def transposition_bfs(spec: GraphProduct, u: Sequence[Letter], v: Sequence[Letter],
                      budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Explore the closure of ``rs -> sr`` starting from ``u``."""
    u, target = canonical(spec, u), canonical(spec, v)
    if len(u) > 16:
        raise BudgetExceeded("word too long for ideal enumeration")
    seen = {u}
    frontier = deque([u])
    while frontier:
        x = frontier.popleft()
        if x == target:
            return True
        for mask in _ideals(spec, x):
            r = tuple(a for i, a in enumerate(x) if mask >> i & 1)
            s = tuple(a for i, a in enumerate(x) if not mask >> i & 1)
            y = canonical(spec, s + r)
            if y not in seen:
                seen.add(y)
                if len(seen) > budget.max_states:
                    raise BudgetExceeded("transposition class exceeded the state budget")
                frontier.append(y)
    return False


def enumerate_geodesics(spec: GraphProduct, w: Sequence[Letter],
                        budget: OracleBudget = DEFAULT_BUDGET) -> list[list[str]]:
    """All shortest generator words for ``w``, in lexicographic order."""
    key = _keyer(spec, budget)
    target = key(w)
    states = 0
    for length in range(budget.max_word_length + 1):
        found = []
        for x in product(spec.symbol_order, repeat=length):
            states += 1
            if states > budget.max_states:
                raise BudgetExceeded("geodesic enumeration exceeded the state budget")
            if key(bracket(spec, x)) == target:
                found.append(list(x))
        if found:
            return found
    raise BudgetExceeded("no representative within the word-length budget")


def strip_cyclic_reduce(spec: GraphProduct, u: Sequence[Letter],
                        budget: OracleBudget = DEFAULT_BUDGET) -> Word:
    """Conjugate a minimal letter around to meet a maximal one, until none pair up.

    Works on the commutation class directly: a minimal letter is one that
    can be swapped to the front, a maximal one to the back.
    """
    w = naive_normal_form(spec, u, 0, budget)
    for _ in range(len(w) + 1):
        hit = None
        for i, a in enumerate(w):
            if any(spec.dependent(b.node, a.node) for b in w[:i]):
                continue
            for j in range(len(w) - 1, -1, -1):
                b = w[j]
                if j != i and b.node == a.node and not any(spec.dependent(c.node, b.node) for c in w[j + 1:]):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            return w
        i, j = hit
        rest = tuple(x for k, x in enumerate(w) if k not in (i, j))
        # a_i w' a_j ~ w' a_j a_i
        w = naive_normal_form(spec, rest + (w[j], w[i]), 0, budget)
    raise GraphProductError("strip reduction did not terminate")
