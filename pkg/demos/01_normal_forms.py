"""Normal forms in a right-angled Artin group.

Three infinite cyclic nodes alpha, beta, gamma where only alpha and beta
commute.  We follow one word through dependence graphs, reduction and
shortlex normal form.
"""
from pathlib import Path

from graphprod import build_dependence_graph, emit_dot, linearize, load_spec, normal_form, parse_word
from graphprod.traces import shortlex_nf, word_problem
from graphprod.words import format_word

spec = load_spec(Path(__file__).parent / "specs" / "raag.gp")
w = parse_word(spec, "a b a- c a b-")

# The dependence graph orders every pair of letters on dependent nodes.
g = build_dependence_graph(spec, w)
print("word:          ", format_word(spec, w))
print("arcs:          ", len(g.arcs))
print("Hasse arcs:    ", sorted((i + 1, j + 1) for i, j in g.hasse))

# a and a- are Hasse neighbours (b commutes with a), so they cancel.
nf = normal_form(spec, w)
print("normal form:   ", format_word(spec, linearize(spec, nf)))
print("shortlex:      ", " ".join(shortlex_nf(spec, w)))
print()
print(emit_dot(spec, g))

# Commutators of commuting generators are trivial, the others are not.
for text in ("a b a- b-", "a c a- c-"):
    print(f"{text!r:14} trivial: {word_problem(spec, parse_word(spec, text))}")
