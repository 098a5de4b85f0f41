"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""
import itertools
import random
import sys
import time

import pytest

from graphprod.amalgam import IDENTITY, _wp_rec, det, mat_inv, mat_mul, wp_via_decomposition, X_MATRIX, Y_MATRIX
from graphprod.conjugacy import (
    conjugate,
    cyclic_form,
    cyclically_reduce,
    is_cyclically_reduced,
    transposition_equiv,
)
from graphprod.corpus import corpus_spec, random_word, s3
from graphprod.errors import CrossCheckError
from graphprod.nodegroups import Cyclic, FreeGroup, Integers, free_reduce
from graphprod.oracles import (
    OracleBudget,
    _ideals,
    brute_conjugate,
    enumerate_geodesics,
    naive_normal_form,
    transposition_bfs,
)
from graphprod.traces import (
    alpha_rounds,
    is_reduced,
    build_dependence_graph,
    emit_dot,
    linearize,
    normal_form,
    reduce_graph,
    shortlex_nf,
    trace_equal,
    word_problem,
)
from graphprod.words import bracket, canonical, invert, parse_word

SPEC_ORDER = ["raag", "racg", "free", "direct"]
BUDGET = OracleBudget(max_word_length=12, max_conjugator_length=5, max_states=10**5)


def report(record, number, title, ok, detail, elapsed, limit=None):
    timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}: {detail}; {timing}"
    record("acceptance", line)
    print(line)


def criterion2_inputs():
    """1000 seeded random words of Sigma-length <= 12 per corpus spec."""
    out = {}
    for k, name in enumerate(SPEC_ORDER):
        spec = corpus_spec(name)
        rng = random.Random(1000 + k)
        out[name] = [random_word(spec, rng, 12) for _ in range(1000)]
    return out


INPUTS = criterion2_inputs()


def test_criterion_01_worked_example(record_property):
    t = time.perf_counter()
    spec = corpus_spec("raag")
    w = parse_word(spec, "a b a- c a b-")
    nf = linearize(spec, normal_form(spec, w))
    g = build_dependence_graph(spec, w)
    full = emit_dot(spec, g, full=True).count("->")
    hasse = emit_dot(spec, g).count("->")
    same = trace_equal(spec, nf, parse_word(spec, "b c b- a"))
    elapsed = time.perf_counter() - t
    ok = same and full == 9 and hasse == 5 and elapsed < 1
    report(record_property, 1, "worked example reproduction", ok, f"nf~'b c b- a'={same}, arcs full={full}, hasse={hasse}", elapsed, 1)
    assert ok


def test_criterion_02_normal_form_oracle(record_property):
    t = time.perf_counter()
    total = agree = 0
    for name in SPEC_ORDER:
        spec = corpus_spec(name)
        for seed, w in enumerate(INPUTS[name]):
            naive = naive_normal_form(spec, w, seed, BUDGET)
            nf = linearize(spec, normal_form(spec, w))
            total += 1
            agree += word_problem(spec, w) == (not naive) and trace_equal(spec, nf, naive)
    elapsed = time.perf_counter() - t
    ok = agree == total and elapsed < 60
    report(record_property, 2, "normal-form oracle equivalence", ok, f"{agree}/{total} agree", elapsed, 60)
    assert ok


def test_criterion_03_confluence(record_property):
    t = time.perf_counter()
    rng = random.Random(3)
    agree = 0
    for k in range(500):
        spec = corpus_spec(SPEC_ORDER[k % 4])
        w = random_word(spec, rng, 12)
        g = build_dependence_graph(spec, w)
        a = reduce_graph(spec, g, random.Random(2 * k))
        b = reduce_graph(spec, g, random.Random(2 * k + 1))
        agree += trace_equal(spec, a.labels, b.labels)
    elapsed = time.perf_counter() - t
    ok = agree == 500 and elapsed < 10
    report(record_property, 3, "confluence of reduce_graph", ok, f"{agree}/500 trace-equal", elapsed, 10)
    assert ok


def test_criterion_04_alpha_rounds(record_property):
    t = time.perf_counter()
    total = same = single = 0
    for name in SPEC_ORDER:
        spec = corpus_spec(name)
        for w in INPUTS[name]:
            out, extra = alpha_rounds(spec, w)
            total += 1
            same += trace_equal(spec, out, reduce_graph(spec, build_dependence_graph(spec, w)).labels)
            single += extra == 0
    elapsed = time.perf_counter() - t
    ok = same == total and single == total
    report(record_property, 4, "alpha-rounds fidelity", ok, f"{same}/{total} match rewriting, {single}/{total} single round", elapsed)
    assert ok


def test_criterion_05_shortlex_geodesic(record_property):
    t = time.perf_counter()
    spec = corpus_spec("racg")
    elements = {}
    for w in INPUTS["racg"]:
        sl = shortlex_nf(spec, w)
        if len(sl) <= 6:
            elements.setdefault(canonical(spec, bracket(spec, sl)), (w, sl))
    agree = 0
    for w, sl in elements.values():
        agree += enumerate_geodesics(spec, w, BUDGET)[0] == sl
    elapsed = time.perf_counter() - t
    ok = agree == len(elements) and elapsed < 120
    report(record_property, 5, "shortlex = least geodesic (RACG)", ok, f"{agree}/{len(elements)} elements", elapsed, 120)
    assert ok


def test_criterion_06_conjugacy_vs_brute(record_property):
    t = time.perf_counter()
    spec = corpus_spec("racg")
    words = [list(x) for n in range(6) for x in itertools.product(spec.symbol_order, repeat=n)]
    rng = random.Random(6)
    pairs = [(rng.choice(words), rng.choice(words)) for _ in range(2000)]
    wide = OracleBudget(max_conjugator_length=8)
    agree = rechecked = positives = 0
    failures = []
    for us, vs in pairs:
        u, v = bracket(spec, us), bracket(spec, vs)
        ours = conjugate(spec, u, v)
        brute = brute_conjugate(spec, u, v, BUDGET)
        if ours and not brute:
            rechecked += 1
            brute = brute_conjugate(spec, u, v, wide)
        positives += ours
        if ours == brute:
            agree += 1
        else:
            failures.append((" ".join(us), " ".join(vs), ours))
    elapsed = time.perf_counter() - t
    ok = agree == len(pairs) and elapsed < 300
    detail = f"{agree}/{len(pairs)} agree ({positives} conjugate), {rechecked} re-checked at bound 8"
    if failures:
        detail += f", first disagreement {failures[0]}"
    report(record_property, 6, "conjugacy vs brute force (RACG)", ok, detail, elapsed, 300)
    assert ok


def _random_transposition(spec, w, rng):
    w = canonical(spec, w)
    mask = rng.choice(list(_ideals(spec, w)))
    r = tuple(a for i, a in enumerate(w) if mask >> i & 1)
    s = tuple(a for i, a in enumerate(w) if not mask >> i & 1)
    return s + r


def test_criterion_07_transposition(record_property):
    t = time.perf_counter()
    rng = random.Random(7)
    total = agree = positives = 0
    for k in range(500):
        spec = corpus_spec(SPEC_ORDER[k % 4])
        u = ()
        while not u or len(u) > 8:
            u = cyclically_reduce(spec, random_word(spec, rng, 12))
        # a member of the class (chain of transpositions), plus shuffles and
        # a single-letter inversion, which keep per-node counts but mostly
        # leave the class
        v = u
        for _ in range(rng.randint(1, 3)):
            v = _random_transposition(spec, v, rng)
        cands = [v]
        for _ in range(10):
            shuffled = list(u)
            rng.shuffle(shuffled)
            cands.append(tuple(shuffled))
        i = rng.randrange(len(u))
        cands.append(u[:i] + invert(spec, u[i:i + 1]) + u[i + 1:])
        for cand in cands:
            if not (is_reduced(spec, cand) and is_cyclically_reduced(spec, cand)):
                continue
            total += 1
            ours = transposition_equiv(spec, u, cand)
            positives += ours
            agree += ours == transposition_bfs(spec, u, cand, BUDGET)
    elapsed = time.perf_counter() - t
    ok = agree == total and elapsed < 60
    detail = f"{agree}/{total} agree ({positives} equivalent, {total - positives} not)"
    report(record_property, 7, "transposition closure", ok, detail, elapsed, 60)
    assert ok


def test_criterion_08_cyclic_reduction(record_property):
    t = time.perf_counter()
    spec = corpus_spec("racg")
    rng = random.Random(8)
    passed = 0
    for _ in range(1000):
        # length <= 10 keeps the needed conjugator within 5 letters
        u = random_word(spec, rng, 10)
        f = cyclic_form(spec, u)
        arith = all(
            2 * f.n[a] - f.k[a] == 2 * f.p_len[a] + f.eps[a] and f.eps[a] in (0, 1) for a in spec.nodes
        )
        ok = is_cyclically_reduced(spec, f.core) and arith and brute_conjugate(spec, u, f.core, BUDGET)
        passed += ok
    elapsed = time.perf_counter() - t
    ok = passed == 1000
    report(record_property, 8, "cyclic reduction", ok, f"{passed}/1000 words", elapsed)
    assert ok


def test_criterion_09_amalgam(record_property):
    t = time.perf_counter()
    _wp_rec.cache_clear()
    total = agree = fired = 0
    for k, name in enumerate(SPEC_ORDER):
        spec = corpus_spec(name)
        rng = random.Random(900 + k)
        for i in range(500):
            w = random_word(spec, rng, 12)
            if i % 2:
                # conjugate of a commutator-like product, trivial more often
                z = random_word(spec, rng, 4)
                x = random_word(spec, rng, 4)
                w = invert(spec, z) + x + w[: len(w) // 2] + invert(spec, x) + invert(spec, w[: len(w) // 2]) + z
            total += 1
            try:
                agree += wp_via_decomposition(spec, w) == word_problem(spec, w)
            except CrossCheckError:
                fired += 1
    comm = mat_mul(mat_mul(X_MATRIX, Y_MATRIX), mat_mul(mat_inv(X_MATRIX), mat_inv(Y_MATRIX)))
    matrices_ok = comm != IDENTITY and det(comm) == 1
    elapsed = time.perf_counter() - t
    ok = agree == total and fired == 0 and matrices_ok and elapsed < 60
    detail = f"{agree}/{total} agree, cross-check fired {fired}x, [x,y] = {comm} (det {det(comm)})"
    report(record_property, 9, "amalgam pipeline", ok, detail, elapsed, 60)
    assert ok


def _node_group_checks():
    groups = {
        "Integers": (Integers([("a", 1), ("a-", -1)]), list(range(-3, 4))),
        "Cyclic(3)": (Cyclic(3, [("t", 1), ("t-", 2)]), [0, 1, 2]),
        "FiniteCayley(S3)": (s3(), list(range(6))),
        "FreeGroup(2)": (
            FreeGroup(2, [("x", (1,)), ("x-", (-1,)), ("y", (2,)), ("y-", (-2,))]),
            [w for n in range(3) for w in itertools.product([1, -1, 2, -2], repeat=n) if free_reduce(w) == w],
        ),
    }
    failures = []
    for label, (g, xs) in groups.items():
        e = g.identity
        for x, y, z in itertools.product(xs[:7], repeat=3):
            if g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z)):
                failures.append(f"{label} associativity")
        for x in xs:
            if g.multiply(x, e) != x or not g.is_identity(g.multiply(x, g.invert(x))):
                failures.append(f"{label} identity/inverse at {x}")
            if not g.is_identity(x) and g.evaluate(g.shortlex(x)) != x:
                failures.append(f"{label} shortlex round trip at {x}")
            if not g.is_conjugate(x, x):
                failures.append(f"{label} reflexive at {x}")
        for x, y in itertools.product(xs, repeat=2):
            c = g.is_conjugate(x, y)
            if c != g.is_conjugate(y, x):
                failures.append(f"{label} symmetric at {x},{y}")
            witness = any(g.multiply(g.multiply(g.invert(z), x), z) == y for z in xs)
            if witness and not c:
                failures.append(f"{label} misses conjugate {x},{y}")
            if g.is_finite and c != witness:
                failures.append(f"{label} exhaustive mismatch {x},{y}")
        for x, y, z in itertools.product(xs[:7], repeat=3):
            if g.is_conjugate(x, y) and g.is_conjugate(y, z) and not g.is_conjugate(x, z):
                failures.append(f"{label} transitive")
    return len(groups), failures


def test_criterion_10_node_groups(record_property):
    t = time.perf_counter()
    count, failures = _node_group_checks()
    elapsed = time.perf_counter() - t
    ok = not failures
    report(record_property, 10, "node-group layer", ok, f"{count} kinds, {len(failures)} failures" + (f": {failures[:3]}" if failures else ""), elapsed)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
