"""Exit criteria, one test per criterion.

Every comparison is exact.  Each test records a one-line PASS/FAIL
verdict, printed in the terminal summary (see conftest.py).  Run alone
with ``pytest tests/test_acceptance.py``.
"""

import random
import time
import warnings
from itertools import permutations

import pytest

from circalg.algebra import hilbert_function
from circalg.corpus import (
    GAIN_POOL,
    builtin_corpus,
    random_gain_graphs,
    random_gains,
    random_multigraph,
    random_orientation,
)
from circalg.enumeration import (
    classify_subgraph,
    enumerate_pseudoforests,
    even_activity_profile,
    forest_activity_profile,
    is_even_circuit,
)
from circalg.graphs import (
    GainAssignment,
    LoopReorientationWarning,
    Orientation,
    cycle_graph,
    gain_incidence,
    handcuff,
    reorient_edge,
    undirected_incidence,
)
from circalg.linalg import kernel_basis
from circalg.matroid import (
    VectorMatroid,
    distinct_prime_gains,
    orientation_independent_bruteforce,
    orientation_independent_criterion,
    vector_activity_profile,
)
from circalg.verify import MATCH, verify_1, verify_2, verify_A

RESULTS: list[str] = []
CORPUS = builtin_corpus()


def report(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
    within = elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    line = f"[{verdict}] criterion {number}: {title} ({elapsed:.2f}s / limit {limit:.0f}s)"
    if detail:
        line += f" - {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_1_gain_triangle_example(triangle):
    start = time.perf_counter()
    gamma = GainAssignment((1, 2, 2))
    same = hilbert_function(gain_incidence(triangle, Orientation((False, False, False)), gamma)).total
    opposite = hilbert_function(gain_incidence(triangle, Orientation((False, False, True)), gamma)).total
    report(1, "3-cycle gains (1,2,2): dim 8 co-directed, 7 opposite", (same, opposite) == (8, 7),
           time.perf_counter() - start, 1, f"got {same} and {opposite}")


def test_criterion_2_forests_sweep():
    start = time.perf_counter()
    rng = random.Random(2)
    bad, n = [], 0
    for entry in CORPUS:
        for _ in range(3):
            r = verify_A(entry.graph, random_orientation(rng, entry.graph.num_edges), name=entry.name)
            n += 1
            if r.status != MATCH:
                bad.append(entry.name)
    report(2, "directed incidence: Hilbert = forests graded by external activity", not bad,
           time.perf_counter() - start, 300, f"{n} instances, {len(bad)} mismatches {bad[:5]}")


def test_criterion_3_odd_pseudoforest_sweep():
    start = time.perf_counter()
    bad = [e.name for e in CORPUS if verify_1(e.graph, name=e.name).status != MATCH]
    report(3, "undirected incidence: Hilbert = odd-circle pseudoforests graded by even activity", not bad,
           time.perf_counter() - start, 300, f"{len(CORPUS)} graphs, {len(bad)} mismatches {bad[:5]}")


def test_criterion_4_dependence_is_even_circuit():
    start = time.perf_counter()
    bad, subsets = [], 0
    for entry in CORPUS:
        G = entry.graph
        M = VectorMatroid(undirected_incidence(G))
        for S in range(1 << G.num_edges):
            subsets += 1
            c = classify_subgraph(G, S)
            dependent = not M.is_independent(S)
            if c.has_even_circuit != dependent or (
                c.has_even_circuit and (c.witness & ~S or not is_even_circuit(G, c.witness))
            ):
                bad.append((entry.name, S))
    (c4,) = kernel_basis(undirected_incidence(cycle_graph(4)))
    c4_ok = c4 == (1, -1, 1, -1)
    (cuff,) = kernel_basis(undirected_incidence(handcuff(7, 5, 2)))
    cuff_ok = [abs(x) for x in cuff] == [1] * 7 + [2, 2] + [1] * 5 and cuff[7] == -cuff[8]
    report(4, "A+ column dependence <=> even circuit (with C4 and handcuff kernels)",
           not bad and c4_ok and cuff_ok, time.perf_counter() - start, 300,
           f"{subsets} subsets, {len(bad)} disagreements, C4 kernel {c4_ok}, handcuff kernel {cuff_ok}")


def test_criterion_5_bicircular_generic_gains():
    start = time.perf_counter()
    bad = []
    for entry in CORPUS:
        G = entry.graph
        r = verify_2(G, distinct_prime_gains(G.num_edges), name=entry.name)
        pseudo = sum(1 for _ in enumerate_pseudoforests(G))
        if r.status != MATCH or r.computed["total"] != pseudo:
            bad.append(entry.name)
    report(5, "distinct-prime gains: total = pseudoforests, Hilbert same for all orientations", not bad,
           time.perf_counter() - start, 600, f"{len(CORPUS)} graphs, {len(bad)} mismatches {bad[:5]}")


def test_criterion_6_orientation_deciders_agree():
    start = time.perf_counter()
    rng = random.Random(6)
    instances = [(e.name, e.graph, random_gains(rng, e.graph.num_edges, GAIN_POOL)) for e in CORPUS]
    instances += [(f"random-{i}", G, g) for i, (G, g) in enumerate(random_gain_graphs(7, 200))]
    bad, dependent = [], 0
    for name, G, gamma in instances:
        crit = orientation_independent_criterion(G, gamma)
        brute = orientation_independent_bruteforce(G, gamma)
        dependent += not brute.independent
        if crit.independent != brute.independent:
            bad.append(name)
    report(6, "orientation independence: cycle criterion = all-orientation sweep", not bad,
           time.perf_counter() - start, 600,
           f"{len(instances)} instances ({dependent} orientation-dependent), {len(bad)} disagreements")


def _ordering_graphs():
    small = [e.graph for e in CORPUS if e.graph.num_edges <= 5]
    large = [e.graph for e in CORPUS if 6 <= e.graph.num_edges <= 8]
    rng = random.Random(77)
    while sum(1 for G in large if G.num_edges >= 7) < 20:
        G = random_multigraph(rng, 5, 8)
        if G.num_edges >= 7:
            large.append(G)
    return small, large


def test_criterion_7_order_independence():
    start = time.perf_counter()
    rng = random.Random(7)
    small, large = _ordering_graphs()
    bad = []
    checks = 0

    def profiles(G, M, order):
        return (forest_activity_profile(G, order).counts,
                vector_activity_profile(M, order).counts,
                even_activity_profile(G, order).counts)

    for G in small + large:
        M = VectorMatroid(gain_incidence(G, None, random_gains(rng, G.num_edges)))
        base = profiles(G, M, None)
        if G.num_edges <= 5:
            orders = list(permutations(range(G.num_edges)))
        else:
            orders = []
            for _ in range(20):
                o = list(range(G.num_edges))
                rng.shuffle(o)
                orders.append(o)
        for o in orders:
            checks += 1
            if profiles(G, M, o) != base:
                bad.append(G.edges)
                break
    report(7, "activity profiles independent of the edge ordering", not bad,
           time.perf_counter() - start, 600,
           f"{len(small)} graphs with all orderings, {len(large)} with 20 samples, {checks} orderings")


def test_criterion_8_algebra_invariances():
    start = time.perf_counter()
    rng = random.Random(8)
    bad = 0
    for _ in range(50):
        G = random_multigraph(rng, 4, 6)
        sigma = random_orientation(rng, G.num_edges)
        gamma = random_gains(rng, G.num_edges)
        A = gain_incidence(G, sigma, gamma)
        base = hilbert_function(A)
        rows, cols = list(range(A.rows)), list(range(A.cols))
        rng.shuffle(rows)
        rng.shuffle(cols)
        j = rng.randrange(A.cols)
        e = rng.randrange(G.num_edges)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", LoopReorientationWarning)
            s2, g2 = reorient_edge(G, sigma, gamma, e)
        variants = [
            A.select_rows(rows),
            A.select_columns(cols),
            A.scale_column(j, rng.choice([q for q in GAIN_POOL if q != 1])),
            gain_incidence(G, s2, g2),
        ]
        bad += any(hilbert_function(B) != base for B in variants)
    report(8, "Hilbert function invariant under permutations, column scaling, reorientation",
           bad == 0, time.perf_counter() - start, 600, f"50 instances, {bad} failures")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
