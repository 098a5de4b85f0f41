"""The word problem through an amalgam decomposition.

Removing the node beta writes the group as P *_A (A x B) with P the
product on {alpha, gamma}, A generated by the link {alpha} and B = <b>.
A word is trivial iff its image in P is trivial, its B-syllables multiply
to 1, and a derived word in a free group is trivial.  The free-group test
runs through 2x2 integer matrices.
"""
from pathlib import Path

from graphprod import load_spec, parse_word
from graphprod.errors import NotInKernel
from graphprod.amalgam import (
    amalgam_wp,
    encode_basis,
    f2_encode_eval,
    instance_for,
    syllables,
    to_basis_word,
    wp_via_decomposition,
)

spec = load_spec(Path(__file__).parent / "specs" / "raag.gp")
inst = instance_for(spec, "beta")
print("P nodes:", inst.P.nodes, " A:", inst.A)

for text in ("b a b- a-", "c b c- b-", "c b c- b c b- c- b-", "b c a b- c- a-"):
    w = syllables(parse_word(spec, text), "beta", inst.B)
    print(f"\n{text}")
    print("  B-syllables:", w.bs)
    try:
        u = to_basis_word(inst, w)
    except NotInKernel as exc:
        print("  not in the kernel:", exc)
        print("  trivial:", amalgam_wp(inst, w))
        continue
    mat, trivial = f2_encode_eval(u)
    print("  basis word:", u.as_ints(), "over", u.basis)
    print("  in F(x, y):", encode_basis(u))
    print("  matrix:", mat, " trivial:", trivial)

# The recursion splits off one node at a time.
print()
for text in ("c a b a- b- c-", "c a b a- c- b-"):
    w = parse_word(spec, text)
    verdicts = {base: wp_via_decomposition(spec, w, base) for base in spec.nodes}
    print(f"{text}: trivial when split at each node: {verdicts}")
