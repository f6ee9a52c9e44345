"""Exit criteria.  Every check is exact; each test records a PASS/FAIL line
that is printed in the terminal summary."""

import random
import time
from itertools import product

import pytest

from singart.desing import (
    GroupRingElement,
    birman_scan,
    coeff_c,
    coefficient_window,
    deg,
    eta,
    eta_tilde,
    eta_word,
    nonzero_coefficient,
)
from singart.graph import DefiningGraph, all_graphs
from singart.products import Kind
from singart.scans import orbit_scan
from singart.traces import lemma42_scan


@pytest.fixture
def record(request):
    lines = request.config._acceptance_lines

    def _record(name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
        lines.append(line)
        print(line)

    return _record


def words_upto(graph, n):
    tokens = [(k, v) for v in graph.vertices for k in "+-~"]
    return [w for m in range(n + 1) for w in product(tokens, repeat=m)]


def laurent_power_oracle(p, q):
    """Dense coefficient list of (s - 1/s)^p s^q, p >= 0, as {exponent: coeff}."""
    poly = {q: 1}
    for _ in range(p):
        nxt = {}
        for e, c in poly.items():
            nxt[e + 1] = nxt.get(e + 1, 0) + c
            nxt[e - 1] = nxt.get(e - 1, 0) - c
        poly = nxt
    return {e: c for e, c in poly.items() if c}


def test_1_birman_injectivity(P, record):
    cases = [
        (P, 3),
        (DefiningGraph.from_edges("ab"), 4),
        (DefiningGraph.from_edges("ab", ["ab"]), 4),
    ]
    details = []
    ok = True
    for g, n in cases:
        t0 = time.perf_counter()
        report = birman_scan(g, n)
        elapsed = time.perf_counter() - t0
        ok = ok and report.ok and elapsed < 30
        details.append(f"{len(g.vertices)}v/{len(g.edges)}e len<={n}: "
                       f"{report.distinct} elements, {len(report.collisions)} collisions, {elapsed:.1f}s")
    record("1 Birman injectivity", ok, "; ".join(details))
    assert ok


def test_2_normal_forms_and_orbits(record):
    t0 = time.perf_counter()
    graphs = [g for names in ("a", "ab", "abc") for g in all_graphs(list(names))]
    total = 0
    failures = []
    for kind in Kind:
        for g in graphs:
            r = orbit_scan(g, kind, 5, 2)
            total += r.expressions
            failures += r.failures
    # every weight assignment where that is affordable
    exhaustive = 0
    for kind, n in ((Kind.INT, 4), (Kind.INT_INT, 2)):
        for g in graphs:
            r = orbit_scan(g, kind, n, 2, exhaustive=True)
            exhaustive += r.expressions
            failures += r.failures
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record("2 normal-form uniqueness / reduced iff M-reduced", ok,
           f"{len(graphs)} graphs x 4 kinds, {total} pattern representatives + "
           f"{exhaustive} exhaustive expressions, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 60


def test_3_lemma42(record):
    t0 = time.perf_counter()
    report = lemma42_scan(max_letters=4, max_l=4, max_p=3)
    elapsed = time.perf_counter() - t0
    ok = report.ok and elapsed < 60
    record("3 trace cancellation lemma, exhaustive", ok,
           f"{report.instances} instances, {report.hypothesis_true} with hypothesis, "
           f"{len(report.violations)} violations, {elapsed:.1f}s")
    assert report.ok, report.violations[:5]
    assert elapsed < 60


def test_4_frz_equivalence(P, M, record):
    t0 = time.perf_counter()
    decisions = [("sigma", 1), ("sigma", 3), ("sigma", -2), ("tau", 1), ("tau", 2)]
    checked = 0
    true_count = 0
    disagreements = []
    for alpha in words_upto(P, 3):
        for s, t in product(P.vertices, repeat=2):
            values = [M.frz_decide(f, alpha, s, t, k) for f, k in decisions]
            checked += 1
            true_count += values[0]
            if len(set(values)) > 1:
                disagreements.append((alpha, s, t, values))
    elapsed = time.perf_counter() - t0
    ok = not disagreements and elapsed < 120
    record("4 FRZ equivalence", ok,
           f"{checked} (alpha,s,t) triples, {true_count} intertwining, "
           f"{len(disagreements)} disagreements, {elapsed:.1f}s")
    assert not disagreements, disagreements[:5]
    assert elapsed < 120


def test_5_dual_representation(P, M, record):
    t0 = time.perf_counter()
    words = words_upto(P, 3)
    semi = [M.evaluate(w) for w in words]
    direct = [M.evaluate_direct(w) for w in words]
    mismatches = 0
    equal_pairs = 0
    for i in range(len(words)):
        for j in range(len(words)):
            a = M.element_equals(semi[i], semi[j])
            b = direct[i] == direct[j]
            equal_pairs += a
            mismatches += a != b
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60
    record("5 dual representation agreement", ok,
           f"{len(words) ** 2} pairs, {equal_pairs} equal, {mismatches} mismatches, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 60


def test_6_homomorphisms(P, M, record):
    G = M.group
    rng = random.Random(20061)
    tokens = [(k, v) for v in P.vertices for k in "+-~"]
    short = words_upto(P, 2)
    pairs = [(x, y) for x in short for y in short]
    for _ in range(10_000):
        pairs.append(tuple(tuple(rng.choice(tokens) for _ in range(rng.randint(0, 5))) for _ in "xy"))
    violations = []
    for w1, w2 in pairs:
        x, y = M.evaluate(w1), M.evaluate(w2)
        xy = M.multiply(x, y)
        if not M.element_equals(xy, M.evaluate(w1 + w2)):
            violations.append(("evaluate", w1, w2))
        if M.theta(xy) != G.multiply(M.theta(x), M.theta(y)):
            violations.append(("theta", w1, w2))
        if M.ord(xy) != M.ord(x) + M.ord(y):
            violations.append(("ord", w1, w2))
        gx, gy = M.theta(x), M.theta(y)
        if deg(G.multiply(gx, gy)) != deg(gx) + deg(gy):
            violations.append(("deg", w1, w2))
        if M.theta(M.iota(gx)) != gx:
            violations.append(("theta-iota", w1, w2))
        if eta(M, xy) != eta(M, x) * eta(M, y):
            violations.append(("eta", w1, w2))
    ok = not violations
    record("6 homomorphism suite", ok, f"{len(pairs)} pairs, {len(violations)} violations")
    assert not violations, violations[:5]


def test_7_coefficients(M, record):
    problems = []
    for p in range(0, 7):
        for q in range(-4, 5):
            if (p, q) == (0, 0):
                continue
            oracle = laurent_power_oracle(p, q)
            for n in range(q - p - 2, q + p + 3):
                if coeff_c(n, p, q) != oracle.get(n, 0):
                    problems.append(("oracle", n, p, q))
    for p in range(-4, 7):
        for q in range(-4, 5):
            if (p, q) == (0, 0):
                continue
            window = coefficient_window(p, q)
            for n in window:
                if (n - p - q) % 2 and coeff_c(n, p, q):
                    problems.append(("parity", n, p, q))
            if p >= 1 and sum(coeff_c(n, p, q) for n in window) != 0:
                problems.append(("sum", p, q))
    for p in range(-4, 5):
        for q in range(-4, 5):
            if (p, q) == (0, 0):
                continue
            a = nonzero_coefficient(p, q)
            if a == 0 or coeff_c(a, p, q) == 0:
                problems.append(("nonzero", p, q))
    unit = GroupRingElement.unit(M.group)
    for cutoff in range(1, 10):
        for text in ("~a !a", "!a ~a"):
            s = eta_tilde(M, M.parse(text, extended=True), cutoff)
            if s.lower != 0 or s.strata != {0: unit}:
                problems.append(("series", text, cutoff))
    ok = not problems
    record("7 coefficient suite", ok, f"{len(problems)} problems")
    assert not problems, problems[:5]


def test_8_conjugate_vertex_crosscheck(P, M, record):
    t0 = time.perf_counter()
    G = M.group
    syllables = [(v, e) for v in P.vertices for e in (-2, -1, 1, 2)]
    conjugators = {()}
    for s1 in syllables:
        conjugators.add(G.normal_form([s1]))
        for s2 in syllables:
            g = G.normal_form([s1, s2])
            if len(g) == 2:
                conjugators.add(g)
    witnesses = [(alpha, s) for alpha in sorted(conjugators, key=repr) for s in P.vertices]
    keys = [M.vertex_key(alpha, s) for alpha, s in witnesses]
    images = []
    for alpha, s in witnesses:
        word = tuple(("+" if e > 0 else "-", v) for v, e in alpha for _ in range(abs(e)))
        inverse = tuple(("-" if k == "+" else "+", v) for k, v in reversed(word))
        # letter-by-letter substitution; never looks at conjugate keys
        images.append(eta_word(M, word + (("~", s),) + inverse))
    equality_bad = 0
    commute_bad = 0
    n = len(witnesses)
    for i in range(n):
        for j in range(i, n):
            if (keys[i] == keys[j]) != (images[i] == images[j]):
                equality_bad += 1
            group_comm = G.multiply(keys[i], keys[j]) == G.multiply(keys[j], keys[i])
            ring_comm = images[i] * images[j] == images[j] * images[i]
            if group_comm != ring_comm:
                commute_bad += 1
    elapsed = time.perf_counter() - t0
    ok = equality_bad == 0 and commute_bad == 0 and elapsed < 60
    record("8 conjugate-vertex cross-check", ok,
           f"{n} witnesses, {n * (n + 1) // 2} pairs, {equality_bad} equality and "
           f"{commute_bad} commutation mismatches, {elapsed:.1f}s")
    assert equality_bad == 0 and commute_bad == 0
    assert elapsed < 60
