"""Small named graph products used by tests and demos."""
from __future__ import annotations

import random

from .graph import GraphProduct, parse_spec
from .nodegroups import FiniteCayley
from .words import Word, bracket

RAAG = """\
# three infinite cyclic nodes; alpha and beta commute
node alpha z
node beta z
node gamma z
edge alpha beta
gen a alpha 1
gen a- alpha -1
gen b beta 1
gen b- beta -1
gen c gamma 1
gen c- gamma -1
order a a- b b- c c-
"""

RACG = """\
# same graph, every node of order two
node alpha cyclic 2
node beta cyclic 2
node gamma cyclic 2
edge alpha beta
gen a alpha 1
gen b beta 1
gen c gamma 1
order a b c
"""

FREE_PRODUCT = """\
# Z/2 * Z/3
node alpha cyclic 2
node beta cyclic 3
gen a alpha 1
gen t beta 1
gen t- beta 2
order a t t-
"""

DIRECT_PRODUCT = """\
# Z/2 x Z/2
node alpha cyclic 2
node beta cyclic 2
edge alpha beta
gen a alpha 1
gen b beta 1
order a b
"""

SOURCES = {
    "raag": RAAG,
    "racg": RACG,
    "free": FREE_PRODUCT,
    "direct": DIRECT_PRODUCT,
}

_cache: dict[str, GraphProduct] = {}


def corpus_spec(name: str) -> GraphProduct:
    """Parsed corpus spec; the same object is returned on every call."""
    if name not in _cache:
        _cache[name] = parse_spec(SOURCES[name])
    return _cache[name]


def corpus() -> dict[str, GraphProduct]:
    return {name: corpus_spec(name) for name in SOURCES}


# S3 with 0 = identity, 1, 2 = 3-cycles, 3, 4, 5 = transpositions.
S3_TABLE = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 0, 4, 5, 3],
    [2, 0, 1, 5, 3, 4],
    [3, 5, 4, 0, 2, 1],
    [4, 3, 5, 1, 0, 2],
    [5, 4, 3, 2, 1, 0],
]


def s3(generators=(("s", 3), ("t", 4))) -> FiniteCayley:
    return FiniteCayley(S3_TABLE, list(generators))


def random_symbols(spec: GraphProduct, rng: random.Random, max_length: int, min_length: int = 0) -> list[str]:
    n = rng.randint(min_length, max_length)
    return [rng.choice(spec.symbol_order) for _ in range(n)]


def random_word(spec: GraphProduct, rng: random.Random, max_length: int, min_length: int = 0) -> Word:
    """Bracketed random generator word of Sigma-length in the given range."""
    return bracket(spec, random_symbols(spec, rng, max_length, min_length))
