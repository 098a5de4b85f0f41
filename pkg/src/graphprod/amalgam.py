"""Word problem in amalgamated products ``G = P *_A (A x B)``.

A word ``w = g_0 b_1 g_1 ... b_m g_m`` is trivial in G iff

1. its image ``g_0 g_1 ... g_m`` is trivial in P,
2. ``b_1 ... b_m`` is trivial in B, and
3. the rewrite of w over the basis ``X = {(i, g, 0)}`` of a free subgroup
   of the kernel is freely trivial.

Step 3 is decided by evaluating the basis word in SL(2, Z) through the
embedding ``F(X) -> F(x, y)``, ``k-th symbol -> x^k y x^-k``, and is
cross-checked against plain free reduction on every call.

A graph product decomposes as such an amalgam by removing one node, so
:func:`wp_via_decomposition` recurses on the number of nodes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .errors import CrossCheckError, InvalidSyllableWord, NotInKernel, UnknownNode
from .graph import GraphProduct, decompose
from .nodegroups import NodeGroup, free_reduce
from .words import Letter, Word, invert, project

Matrix = tuple[tuple[int, int], tuple[int, int]]

X_MATRIX: Matrix = ((0, 1), (-1, -2))
Y_MATRIX: Matrix = ((2, -1), (1, 0))
IDENTITY: Matrix = ((1, 0), (0, 1))


@dataclass
class AmalgamInstance:
    """``P *_A (A x B)`` with a word-problem decider for P.

    ``A`` is a set of nodes of P; membership in the subgroup they generate
    is tested through the retraction: ``x in A`` iff ``x = pi_A(x)`` in P.
    """

    P: GraphProduct
    A: tuple[str, ...]
    B: NodeGroup
    wp_P: Callable[[Word], bool]

    def __post_init__(self):
        missing = set(self.A) - set(self.P.nodes)
        if missing:
            raise UnknownNode(f"link nodes {sorted(missing)} are not nodes of P")

    def in_A(self, x: Sequence[Letter]) -> bool:
        x = tuple(x)
        return self.wp_P(x + invert(self.P, project(self.P, x, self.A)))


@dataclass(frozen=True)
class SyllableWord:
    """``g_0 b_1 g_1 ... b_m g_m`` with ``g_i`` words over P, ``b_j`` in B."""

    blocks: tuple
    bs: tuple

    def __post_init__(self):
        if len(self.blocks) != len(self.bs) + 1:
            raise InvalidSyllableWord("need exactly one more P-block than B-syllables")

    @property
    def m(self) -> int:
        return len(self.bs)

    def normalized(self, B: NodeGroup) -> SyllableWord:
        """Drop identity B-syllables, merging the P-blocks around them."""
        blocks = [tuple(self.blocks[0])]
        bs = []
        for b, g in zip(self.bs, self.blocks[1:]):
            b = B.validate(b)
            if B.is_identity(b):
                blocks[-1] = blocks[-1] + tuple(g)
            else:
                bs.append(b)
                blocks.append(tuple(g))
        return SyllableWord(tuple(blocks), tuple(bs))

    def flatten(self, base: str) -> Word:
        out = list(self.blocks[0])
        for b, g in zip(self.bs, self.blocks[1:]):
            out.append(Letter(base, b))
            out.extend(g)
        return tuple(out)


def syllables(w: Sequence[Letter], base: str, B: NodeGroup) -> SyllableWord:
    """Regroup a graph-product word into P-blocks and B-syllables."""
    blocks: list[list[Letter]] = [[]]
    bs: list = []
    pending = None
    for a in w:
        if a.node == base:
            pending = a.element if pending is None else B.multiply(pending, a.element)
        else:
            if pending is not None:
                bs.append(pending)
                blocks.append([])
                pending = None
            blocks[-1].append(a)
    if pending is not None:
        bs.append(pending)
        blocks.append([])
    return SyllableWord(tuple(map(tuple, blocks)), tuple(bs)).normalized(B)


def coset_indices(inst: AmalgamInstance, prefixes: Sequence[Word]) -> list[int]:
    """``nu(i)``: least ``j`` with ``p_j^-1 p_i`` in A.

    The least such ``j`` is always the first index of its coset, so only
    coset representatives found so far need testing.
    """
    reps: list[int] = []
    nu = []
    for i, p in enumerate(prefixes):
        for j in reps:
            if inst.in_A(invert(inst.P, prefixes[j]) + p):
                nu.append(j)
                break
        else:
            reps.append(i)
            nu.append(i)
    return nu


@dataclass(frozen=True)
class FreeWord:
    """Word over basis symbols ``(coset index, B-element)``.

    ``letters`` holds ``(basis position, sign)`` with positions counted
    from 1 in order of first appearance; ``basis`` lists the keys.
    """

    letters: tuple[tuple[int, int], ...]
    basis: tuple[tuple[int, Hashable], ...] = field(default=())

    def as_ints(self) -> tuple[int, ...]:
        return tuple(k * s for k, s in self.letters)

    def __len__(self):
        return len(self.letters)


def triples(inst: AmalgamInstance, w: SyllableWord) -> list[tuple[int, Hashable, int]]:
    """Triples ``(nu_i, b_1...b_i, nu_{i+1})`` for ``1 <= i < m``.

    Identity-element and ``i == j`` triples are trivial and left out.
    """
    m = w.m
    if m == 0:
        return []
    prefixes = []
    acc: tuple = ()
    for g in w.blocks[:-1]:
        acc = acc + tuple(g)
        prefixes.append(acc)
    nu = coset_indices(inst, prefixes)
    B = inst.B
    out = []
    g = B.identity
    for i in range(m - 1):
        g = B.multiply(g, w.bs[i])
        if not B.is_identity(g) and nu[i] != nu[i + 1]:
            out.append((nu[i], g, nu[i + 1]))
    return out


def to_basis_word(inst: AmalgamInstance, w: SyllableWord, check: bool = True) -> FreeWord:
    """Rewrite a kernel element as a word over the free basis X."""
    w = w.normalized(inst.B)
    if check:
        if not inst.wp_P(sum(w.blocks, ())):
            raise NotInKernel("image in P is not trivial")
        if not inst.B.is_identity(inst.B.product(w.bs)):
            raise NotInKernel("product of B-syllables is not trivial")
    index: dict[tuple[int, Hashable], int] = {}
    letters = []

    def emit(key, sign):
        if key not in index:
            index[key] = len(index) + 1
        letters.append((index[key], sign))

    # (i, g, j) = (i, g, 0) (j, g, 0)^-1, and (0, g, 0) is trivial.
    for i, g, j in triples(inst, w):
        if i != 0:
            emit((i, g), 1)
        if j != 0:
            emit((j, g), -1)
    return FreeWord(tuple(letters), tuple(index))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_inv(a: Matrix) -> Matrix:
    # Inverse in SL(2, Z).
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def det(a: Matrix) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


_F2 = {1: X_MATRIX, -1: mat_inv(X_MATRIX), 2: Y_MATRIX, -2: mat_inv(Y_MATRIX)}


def sl2_eval(xy_word: Sequence[int]) -> Matrix:
    """Evaluate a word over ``x = 1``, ``y = 2`` (negatives are inverses)."""
    m = IDENTITY
    for a in xy_word:
        m = mat_mul(m, _F2[a])
    return m


def encode_basis(u: FreeWord) -> tuple[int, ...]:
    """``F(X) -> F(x, y)``: the k-th basis symbol goes to ``x^k y x^-k``."""
    out: list[int] = []
    for k, s in u.letters:
        out.extend([1] * k + [2 * s] + [-1] * k)
    return tuple(out)


def f2_encode_eval(u: FreeWord) -> tuple[Matrix, bool]:
    """SL(2, Z) image of ``u`` and whether it is the identity."""
    mat = sl2_eval(encode_basis(u))
    trivial = mat == IDENTITY
    if det(mat) != 1:
        raise CrossCheckError(f"determinant {det(mat)} != 1")
    if trivial != (free_reduce(u.as_ints()) == ()):
        raise CrossCheckError(f"matrix and free reduction disagree on {u.as_ints()}")
    return mat, trivial


def amalgam_wp(inst: AmalgamInstance, w: SyllableWord) -> bool:
    w = w.normalized(inst.B)
    if not inst.wp_P(sum(w.blocks, ())):
        return False
    if not inst.B.is_identity(inst.B.product(w.bs)):
        return False
    _, trivial = f2_encode_eval(to_basis_word(inst, w, check=False))
    return trivial


@lru_cache(maxsize=1 << 18)
def _wp_rec(spec: GraphProduct, w: Word, base: str | None) -> bool:
    if not spec.nodes:
        return not w
    if len(spec.nodes) == 1:
        g = spec.groups[spec.nodes[0]]
        return g.is_identity(g.product(a.element for a in w))
    dec = decompose(spec, spec.nodes[-1] if base is None else base)
    inst = AmalgamInstance(dec.P, dec.A, dec.B, lambda x: _wp_rec(dec.P, tuple(x), None))
    return amalgam_wp(inst, syllables(w, dec.base, dec.B))


def wp_via_decomposition(spec: GraphProduct, w: Sequence[Letter], base: str | None = None) -> bool:
    """Word problem by recursive amalgam decomposition.

    The top level splits off ``base`` (default: the last node); deeper
    levels always split off the last remaining node.
    """
    if base is not None:
        spec.rank(base)
    return _wp_rec(spec, tuple(w), base)


def instance_for(spec: GraphProduct, base: str) -> AmalgamInstance:
    """Amalgam instance for splitting ``spec`` at ``base``."""
    dec = decompose(spec, base)
    return AmalgamInstance(dec.P, dec.A, dec.B, lambda x: wp_via_decomposition(dec.P, x))
