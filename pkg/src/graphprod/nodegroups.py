"""Node groups: the vertex groups a graph product is assembled from.

Four kinds are supported.  Elements are plain hashable Python values so
they can sit inside letters, dictionary keys and cache keys:

    Integers      int (arbitrary precision)
    Cyclic(n)     int in range(n)
    FiniteCayley  int index into the Cayley table
    FreeGroup(r)  tuple of signed generator indices, freely reduced

Every group carries its generating alphabet as an ordered list of
``(symbol, element)`` pairs.  The list order is the shortlex order on that
alphabet.
"""
from __future__ import annotations

from collections import deque
from math import gcd
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    IdentityElement,
    InvalidElement,
    InvalidGenerator,
    InvalidGroupTable,
)

Element = Hashable


class NodeGroup:
    """Base class; subclasses implement the arithmetic for one kind."""

    kind = "abstract"

    def __init__(self, generators: Iterable[tuple[str, Element]] = ()):
        gens = [(str(s), self.validate(e)) for s, e in generators]
        seen = set()
        for sym, elt in gens:
            if sym in seen:
                raise InvalidGenerator(f"duplicate generator symbol {sym!r}")
            seen.add(sym)
            if self.is_identity(elt):
                raise InvalidGenerator(f"generator {sym!r} is the identity")
        self.generators: list[tuple[str, Element]] = gens
        self._value = dict(gens)
        if gens:
            values = set(self._value.values())
            for sym, elt in gens:
                if self.invert(elt) not in values:
                    raise InvalidGenerator(
                        f"generator set not closed under inversion: {sym!r} has no inverse symbol"
                    )
            self._check_generates()

    # -- arithmetic, overridden per kind ---------------------------------
    @property
    def identity(self) -> Element:
        raise NotImplementedError

    def validate(self, x) -> Element:
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _inv(self, x):
        raise NotImplementedError

    def parse_literal(self, text: str) -> Element:
        raise NotImplementedError

    def format_literal(self, x: Element) -> str:
        return str(x)

    def _check_generates(self) -> None:
        pass

    def _shortlex(self, x) -> list[str]:
        raise NotImplementedError

    def _conjugate(self, x, y) -> bool:
        raise NotImplementedError

    # -- public surface ---------------------------------------------------
    @property
    def symbols(self) -> list[str]:
        return [s for s, _ in self.generators]

    def generator(self, symbol: str) -> Element:
        return self._value[symbol]

    @property
    def is_finite(self) -> bool:
        return False

    def is_identity(self, x: Element) -> bool:
        return x == self.identity

    def multiply(self, x: Element, y: Element) -> Element:
        return self._mul(self.validate(x), self.validate(y))

    def invert(self, x: Element) -> Element:
        return self._inv(self.validate(x))

    def product(self, xs: Iterable[Element]) -> Element:
        acc = self.identity
        for x in xs:
            acc = self._mul(acc, self.validate(x))
        return acc

    def evaluate(self, symbols: Sequence[str]) -> Element:
        """Fold a word over this group's generating symbols."""
        try:
            return self.product(self._value[s] for s in symbols)
        except KeyError as exc:
            raise InvalidGenerator(f"unknown generator symbol {exc.args[0]!r}") from None

    def shortlex(self, x: Element) -> list[str]:
        """Shortlex-least generator word for a non-identity element."""
        x = self.validate(x)
        if self.is_identity(x):
            raise IdentityElement("shortlex of the identity is never requested")
        if not self.generators:
            raise InvalidGenerator("node group has no generating alphabet")
        return self._shortlex(x)

    def is_conjugate(self, x: Element, y: Element) -> bool:
        return self._conjugate(self.validate(x), self.validate(y))

    def __repr__(self):
        return f"{type(self).__name__}({self._params()}, gens={self.symbols})"

    def _params(self) -> str:
        return ""


class _FiniteMixin:
    """BFS machinery shared by the finite kinds (Cyclic, FiniteCayley)."""

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list[int]:
        return list(range(self.order))

    def _check_generates(self) -> None:
        self._shortlex_table = self._bfs_table()
        if len(self._shortlex_table) != self.order:
            raise InvalidGenerator(
                f"generators reach {len(self._shortlex_table)} of {self.order} elements"
            )

    def _bfs_table(self) -> dict[int, tuple[str, ...]]:
        # Queue order is shortlex order of representatives, so the first
        # visit to an element records its shortlex-least word.
        table = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            g = queue.popleft()
            for sym, s in self.generators:
                h = self._mul(g, s)
                if h not in table:
                    table[h] = table[g] + (sym,)
                    queue.append(h)
        return table

    def _shortlex(self, x):
        return list(self._shortlex_table[x])


class Integers(NodeGroup):
    kind = "z"

    @property
    def identity(self):
        return 0

    def validate(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise InvalidElement(f"integer element expected, got {x!r}")
        return int(x)

    def _mul(self, x, y):
        return x + y

    def _inv(self, x):
        return -x

    def parse_literal(self, text):
        try:
            return int(text)
        except ValueError:
            raise InvalidElement(f"bad integer literal {text!r}") from None

    def _check_generates(self):
        g = 0
        for _, v in self.generators:
            g = gcd(g, v)
        if g != 1:
            raise InvalidGenerator(f"generators span {g}Z, not Z")

    def _shortlex(self, n):
        values = {v for _, v in self.generators}
        if values == {1, -1}:
            sym = next(s for s, v in self.generators if v == (1 if n > 0 else -1))
            return [sym] * abs(n)
        # General generator values: greedy descent along a bounded BFS
        # distance table.  Shortest sums can be reordered to keep partial
        # sums within max|v| of [min(0,n), max(0,n)].
        bound = max(abs(v) for v in values)
        radius = abs(n) + 2 * bound
        dist = {0: 0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for v in values:
                h = g + v
                if abs(h) <= radius and h not in dist:
                    dist[h] = dist[g] + 1
                    queue.append(h)
        word = []
        cur = n
        while cur:
            for sym, v in self.generators:
                rest = cur - v
                if dist.get(rest, -1) == dist[cur] - 1:
                    word.append(sym)
                    cur = rest
                    break
        return word

    def _conjugate(self, x, y):
        return x == y


class Cyclic(_FiniteMixin, NodeGroup):
    kind = "cyclic"

    def __init__(self, modulus: int, generators=()):
        if modulus < 1:
            raise InvalidGroupTable(f"cyclic modulus must be positive, got {modulus}")
        self.modulus = self.order = int(modulus)
        super().__init__(generators)

    def _params(self):
        return str(self.modulus)

    @property
    def identity(self):
        return 0

    def validate(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < self.modulus:
            raise InvalidElement(f"residue in [0, {self.modulus}) expected, got {x!r}")
        return int(x)

    def _mul(self, x, y):
        return (x + y) % self.modulus

    def _inv(self, x):
        return -x % self.modulus

    def parse_literal(self, text):
        try:
            return int(text) % self.modulus
        except ValueError:
            raise InvalidElement(f"bad residue literal {text!r}") from None

    def _conjugate(self, x, y):
        return x == y


class FiniteCayley(_FiniteMixin, NodeGroup):
    """Finite group given by its multiplication table on indices 0..k-1."""

    kind = "finite"

    def __init__(self, table, generators=()):
        t = np.asarray(table, dtype=np.int64)
        k = t.shape[0] if t.ndim == 2 else 0
        if t.ndim != 2 or t.shape != (k, k) or k == 0:
            raise InvalidGroupTable("Cayley table must be a non-empty square matrix")
        if t.min() < 0 or t.max() >= k:
            raise InvalidGroupTable("Cayley table entries out of range")
        ids = [e for e in range(k) if (t[e] == np.arange(k)).all() and (t[:, e] == np.arange(k)).all()]
        if not ids:
            raise InvalidGroupTable("Cayley table has no identity element")
        # (ab)c == a(bc) over all triples.
        if not (t[t, :] == t[:, t]).all():
            raise InvalidGroupTable("Cayley table is not associative")
        e = ids[0]
        inverse = [-1] * k
        for a in range(k):
            hits = np.flatnonzero(t[a] == e)
            if len(hits) != 1 or t[hits[0], a] != e:
                raise InvalidGroupTable(f"element {a} has no two-sided inverse")
            inverse[a] = int(hits[0])
        self.table = t
        self.order = k
        self.identity_index = e
        self.inverse_map = inverse
        super().__init__(generators)

    def _params(self):
        return f"order={self.order}"

    @property
    def identity(self):
        return self.identity_index

    def validate(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < self.order:
            raise InvalidElement(f"index in [0, {self.order}) expected, got {x!r}")
        return int(x)

    def _mul(self, x, y):
        return int(self.table[x, y])

    def _inv(self, x):
        return self.inverse_map[x]

    def parse_literal(self, text):
        try:
            return self.validate(int(text))
        except ValueError:
            raise InvalidElement(f"bad index literal {text!r}") from None

    def _conjugate(self, x, y):
        return any(self._mul(self._mul(self._inv(z), x), z) == y for z in range(self.order))


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Stack cancellation of adjacent ``i, -i`` pairs."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def cyclic_reduce_free(x: Sequence[int]) -> tuple[int, ...]:
    lo, hi = 0, len(x)
    while hi - lo >= 2 and x[lo] == -x[hi - 1]:
        lo += 1
        hi -= 1
    return tuple(x[lo:hi])


class FreeGroup(NodeGroup):
    """Free group of finite rank over the standard basis.

    Generators must be exactly the basis letters and their inverses, one
    symbol each, so the reduced word is its own shortlex form.
    """

    kind = "free"

    def __init__(self, rank: int, generators=()):
        if rank < 1:
            raise InvalidGroupTable(f"free rank must be positive, got {rank}")
        self.rank = int(rank)
        super().__init__(generators)

    def _params(self):
        return str(self.rank)

    @property
    def identity(self):
        return ()

    def validate(self, x):
        try:
            t = tuple(int(a) for a in x)
        except (TypeError, ValueError):
            raise InvalidElement(f"free word expected, got {x!r}") from None
        if any(a == 0 or abs(a) > self.rank for a in t):
            raise InvalidElement(f"letter out of range in {x!r}")
        if free_reduce(t) != t:
            raise InvalidElement(f"free word {x!r} is not freely reduced")
        return t

    def _mul(self, x, y):
        return free_reduce(x + y)

    def _inv(self, x):
        return tuple(-a for a in reversed(x))

    def parse_literal(self, text):
        if text in ("e", ""):
            return ()
        try:
            letters = [int(a) for a in text.split(",")]
        except ValueError:
            raise InvalidElement(f"bad free-word literal {text!r}") from None
        if any(a == 0 or abs(a) > self.rank for a in letters):
            raise InvalidElement(f"letter out of range in {text!r}")
        return free_reduce(letters)

    def format_literal(self, x):
        return ",".join(str(a) for a in x) if x else "e"

    def _check_generates(self):
        by_letter = {}
        for sym, elt in self.generators:
            if len(elt) != 1:
                raise InvalidGenerator(f"free generator {sym!r} must be a single basis letter")
            if elt[0] in by_letter:
                raise InvalidGenerator(f"basis letter {elt[0]} bound twice")
            by_letter[elt[0]] = sym
        if set(by_letter) != {s * i for i in range(1, self.rank + 1) for s in (1, -1)}:
            raise InvalidGenerator("free generators must cover every basis letter and its inverse")
        self._letter_symbol = by_letter

    def _shortlex(self, x):
        return [self._letter_symbol[a] for a in x]

    def _conjugate(self, x, y):
        cx, cy = cyclic_reduce_free(x), cyclic_reduce_free(y)
        if len(cx) != len(cy):
            return False
        if not cx:
            return True
        doubled = cx + cx
        n = len(cx)
        return any(doubled[i:i + n] == cy for i in range(n))


def make_group(kind: str, param=None, generators=()) -> NodeGroup:
    """Build a node group from a kind keyword as used in spec files."""
    if kind == "z":
        return Integers(generators)
    if kind == "cyclic":
        return Cyclic(param, generators)
    if kind == "finite":
        return FiniteCayley(param, generators)
    if kind == "free":
        return FreeGroup(param, generators)
    raise InvalidGroupTable(f"unknown node-group kind {kind!r}")
