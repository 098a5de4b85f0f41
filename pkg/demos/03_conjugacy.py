"""Cyclic reduction and conjugacy.

A reduced word u is written as p r m s p^-1 by reducing u u, where r and s
hold at most one letter per node.  Then m [s r] is a cyclically reduced
conjugate, and conjugacy of cyclically reduced words with a connected
alphabet is a pattern match inside a power.
"""
from pathlib import Path

from graphprod import conjugate, cyclic_form, load_spec, parse_word
from graphprod.oracles import OracleBudget, brute_conjugate
from graphprod.words import format_word

specs = Path(__file__).parent / "specs"
raag = load_spec(specs / "raag.gp")
racg = load_spec(specs / "racg.gp")


def show(spec, text):
    f = cyclic_form(spec, parse_word(spec, text))
    parts = {k: format_word(spec, getattr(f, k)) for k in ("p", "r", "m", "s", "core")}
    print(f"{text:16} " + "  ".join(f"{k}={v}" for k, v in parts.items()))


show(raag, "a b c b- a-")
# c is minimal and maximal: it must not merge with its own copy in u u.
show(raag, "c a c")
show(racg, "a c a")
show(racg, "b c a b c")

print()
pairs = [("a c", "c a"), ("a", "a-"), ("c a c", "a c c"), ("a c b", "b c a"), ("a b", "b- a")]
for u, v in pairs:
    print(f"{u!r:10} ~ {v!r:10} {conjugate(raag, parse_word(raag, u), parse_word(raag, v))}")

# Compare with a brute-force search over short conjugators in the
# right-angled Coxeter group.
print()
budget = OracleBudget(max_conjugator_length=5)
for u, v in [("a c", "c a"), ("a c b", "c b a"), ("a c", "b c"), ("a b c", "c b a")]:
    x, y = parse_word(racg, u), parse_word(racg, v)
    print(f"{u!r:9} ~ {v!r:9} decided {conjugate(racg, x, y)}, search {brute_conjugate(racg, x, y, budget)}")
