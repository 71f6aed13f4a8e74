import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circalg.corpus import builtin_corpus, random_multigraph
from circalg.enumeration import (
    ActivityProfile,
    SizeLimitError,
    SubgraphKind,
    classify_subgraph,
    cycle_gain,
    enumerate_cycles,
    enumerate_odd_circle_pseudoforests,
    enumerate_pseudoforests,
    enumerate_spanning_forests,
    even_activity,
    even_activity_profile,
    external_activity,
    forest_activity_profile,
    is_even_circuit,
    is_forest,
    is_gainless,
    is_odd_circle_pseudoforest,
    mask_to_indices,
)
from circalg.graphs import (
    GainAssignment,
    Multigraph,
    Orientation,
    bouquet,
    complete_graph,
    cycle_graph,
    figure_eight,
    handcuff,
    path_graph,
    undirected_incidence,
)

from oracles import brute_cycles, columns_dependent, nx_is_forest, nx_is_pseudoforest

C4 = cycle_graph(4)
FULL = lambda G: (1 << G.num_edges) - 1  # noqa: E731
SMALL = [e.graph for e in builtin_corpus(3, 5)]


@st.composite
def graphs(draw, max_vertices=4, max_edges=6):
    seed = draw(st.integers(0, 10**6))
    return random_multigraph(random.Random(seed), max_vertices, max_edges)


# -- classification ---------------------------------------------------------------


def test_classify_triangle(triangle):
    assert classify_subgraph(triangle, 0b111).kind is SubgraphKind.ODD_CIRCLE_PSEUDOFOREST


def test_classify_even_cycle():
    c = classify_subgraph(C4, FULL(C4))
    assert c.kind is SubgraphKind.CONTAINS_EVEN_CIRCUIT
    assert c.witness == FULL(C4)
    assert c.pseudoforest


def test_classify_figure_eight():
    G = figure_eight(3, 3)
    c = classify_subgraph(G, FULL(G))
    assert c.kind is SubgraphKind.CONTAINS_EVEN_CIRCUIT
    assert c.witness == FULL(G)
    assert not c.pseudoforest


def test_classify_handcuff_and_forest():
    G = handcuff(3, 5, 3)
    assert classify_subgraph(G, FULL(G)).witness == FULL(G)
    assert classify_subgraph(G, 0b111).kind is SubgraphKind.ODD_CIRCLE_PSEUDOFOREST
    assert classify_subgraph(path_graph(3), 0b111).kind is SubgraphKind.FOREST


def test_two_loops_form_a_degenerate_handcuff():
    c = classify_subgraph(bouquet(2), 0b11)
    assert c.has_even_circuit and c.witness == 0b11
    assert is_even_circuit(bouquet(2), 0b11)


@pytest.mark.parametrize(
    "G, expected",
    [
        (cycle_graph(4), True),
        (cycle_graph(2), True),
        (cycle_graph(5), False),
        (figure_eight(3, 5), True),
        (figure_eight(3, 4), False),
        (handcuff(3, 3, 1), True),
        (handcuff(7, 5, 2), True),
        (handcuff(3, 4, 1), False),
        (complete_graph(4), False),
        (bouquet(3), False),
    ],
)
def test_even_circuit_shapes(G, expected):
    assert is_even_circuit(G, FULL(G)) is expected


@pytest.mark.parametrize("G", SMALL, ids=lambda G: str(G.edges))
def test_classification_agrees_with_undirected_rank(G):
    A = undirected_incidence(G)
    for S in range(1 << G.num_edges):
        c = classify_subgraph(G, S)
        assert c.has_even_circuit == columns_dependent(A, mask_to_indices(S))
        if c.has_even_circuit:
            assert c.witness & S == c.witness
            assert is_even_circuit(G, c.witness)


@pytest.mark.parametrize("G", SMALL, ids=lambda G: str(G.edges))
def test_deleting_from_even_circuit_gives_odd_pseudoforest(G):
    for S in range(1, 1 << G.num_edges):
        if is_even_circuit(G, S):
            for e in mask_to_indices(S):
                assert is_odd_circle_pseudoforest(G, S & ~(1 << e))


# -- enumeration --------------------------------------------------------------------


def test_forest_counts(triangle):
    assert len(list(enumerate_spanning_forests(triangle))) == 7
    assert len(list(enumerate_spanning_forests(path_graph(1)))) == 2
    assert list(enumerate_spanning_forests(bouquet(1))) == [0]


def test_pseudoforest_counts(triangle):
    assert len(list(enumerate_odd_circle_pseudoforests(triangle))) == 8
    assert len(list(enumerate_odd_circle_pseudoforests(C4))) == 15
    assert len(list(enumerate_pseudoforests(C4))) == 16
    G = figure_eight(3, 3)
    assert FULL(G) not in set(enumerate_pseudoforests(G))
    assert FULL(G) not in set(enumerate_odd_circle_pseudoforests(G))


def test_cap():
    with pytest.raises(SizeLimitError):
        list(enumerate_spanning_forests(cycle_graph(5), max_edges=4))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_forest_and_pseudoforest_match_networkx(G):
    forests = set(enumerate_spanning_forests(G))
    pseudo = set(enumerate_pseudoforests(G))
    for S in range(1 << G.num_edges):
        assert (S in forests) == nx_is_forest(G, S)
        assert (S in pseudo) == nx_is_pseudoforest(G, S)
    with_cycle = sum(1 for S in range(1 << G.num_edges) if not is_forest(G, S))
    assert len(forests) + with_cycle == 2 ** G.num_edges


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_independence_systems_are_hereditary(G):
    for family in (
        set(enumerate_spanning_forests(G)),
        set(enumerate_pseudoforests(G)),
        set(enumerate_odd_circle_pseudoforests(G)),
    ):
        for S in family:
            for e in mask_to_indices(S):
                assert S & ~(1 << e) in family


@settings(max_examples=60, deadline=None)
@given(graphs(max_edges=7))
def test_cycles_match_brute_force(G):
    assert enumerate_cycles(G) == brute_cycles(G)


def test_cycle_counts(triangle):
    assert enumerate_cycles(triangle) == [0b111]
    assert len(enumerate_cycles(complete_graph(4))) == 7
    assert enumerate_cycles(cycle_graph(2)) == [0b11]
    assert enumerate_cycles(bouquet(2)) == [0b01, 0b10]


# -- activities -------------------------------------------------------------------


def test_external_activity_triangle(triangle):
    assert external_activity(triangle, 0b110) == 1
    assert external_activity(triangle, 0b101) == 0
    with pytest.raises(ValueError):
        external_activity(triangle, 0b111)


def test_globally_minimal_outside_edge_is_active():
    G = complete_graph(4)
    rng = random.Random(3)
    trees = [F for F in enumerate_spanning_forests(G) if bin(F).count("1") == 3]
    assert len(trees) == 16
    for T in trees:
        for _ in range(5):
            order = list(range(6))
            rng.shuffle(order)
            if not T >> order[0] & 1:
                assert external_activity(G, T, order) >= 1


def test_forest_profiles(triangle):
    p = forest_activity_profile(triangle)
    assert p.graded == (1, 2, 3, 1)
    assert p.total == 7
    assert forest_activity_profile(Multigraph(3, ())).counts == {0: 1}
    for order in permutations(range(3)):
        assert forest_activity_profile(triangle, order) == p


def test_even_activity_examples(triangle):
    assert even_activity(C4, 0b1110) == 1
    for F in enumerate_odd_circle_pseudoforests(triangle):
        assert even_activity(triangle, F) == 0
    with pytest.raises(ValueError):
        even_activity(C4, 0b1111)


def test_even_profile_c4():
    assert even_activity_profile(C4).graded == (1, 3, 6, 4, 1)


@pytest.mark.parametrize("G", [complete_graph(4), figure_eight(3, 3), handcuff(3, 3, 1), bouquet(3)],
                         ids=["K4", "figure-eight", "handcuff", "bouquet"])
def test_profiles_independent_of_ordering(G):
    rng = random.Random(1)
    p, q = forest_activity_profile(G), even_activity_profile(G)
    for _ in range(8):
        order = list(range(G.num_edges))
        rng.shuffle(order)
        assert forest_activity_profile(G, order).counts == p.counts
        assert even_activity_profile(G, order).counts == q.counts


def test_profile_json():
    p = ActivityProfile.from_pairs(3, [(2, 1), (0, 0), (1, 0)])
    assert p.to_json() == {"0": 2, "1": 1}
    assert p.graded == (1, 0, 1, 1)


# -- gains ------------------------------------------------------------------------


def test_cycle_gain_example(triangle):
    gamma = GainAssignment((1, 2, 2))
    assert cycle_gain(triangle, None, gamma, 0b111) == 4
    assert not is_gainless(triangle, None, gamma, 0b111)
    flipped = Orientation((False, False, True))
    assert cycle_gain(triangle, flipped, gamma, 0b111) == 1
    assert is_gainless(triangle, flipped, gamma, 0b111)


@settings(max_examples=60, deadline=None)
@given(graphs(max_edges=6), st.data())
def test_reverse_traversal_is_reciprocal(G, data):
    gains = data.draw(st.lists(st.sampled_from([Fraction(v) for v in (1, -1, 2, 3, -2)] + [Fraction(1, 3)]),
                               min_size=G.num_edges, max_size=G.num_edges))
    flips = data.draw(st.lists(st.booleans(), min_size=G.num_edges, max_size=G.num_edges))
    gamma, sigma = GainAssignment(tuple(gains)), Orientation(tuple(flips))
    for S in enumerate_cycles(G):
        fwd = cycle_gain(G, sigma, gamma, S)
        back = cycle_gain(G, sigma, gamma, S, reverse=True)
        assert fwd * back == 1


def test_all_unit_gains_are_gainless():
    G = complete_graph(4)
    gamma = GainAssignment.constant(1, 6)
    sigma = Orientation((True, False, True, False, False, True))
    assert all(is_gainless(G, sigma, gamma, S) for S in enumerate_cycles(G))


def test_non_cycle_rejected(triangle):
    with pytest.raises(ValueError):
        cycle_gain(triangle, None, GainAssignment((1, 2, 2)), 0b011)
