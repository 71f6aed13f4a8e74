import json

import pytest

from circalg.graphs import GainAssignment, Orientation, cycle_graph, complete_graph, figure_eight, handcuff, undirected_incidence
from circalg.matroid import distinct_prime_gains
from circalg.verify import HYPOTHESIS_NOT_MET, MATCH, verify_theorem


def test_verify_A(triangle):
    r = verify_theorem("A", triangle)
    assert r.status == MATCH
    assert r.claimed == r.computed == {"dims": [1, 2, 3, 1], "total": 7}


def test_verify_1_even_cycle():
    r = verify_theorem("1", cycle_graph(4))
    assert r.match and r.computed["total"] == 15


def test_verify_B_matrix():
    r = verify_theorem("B", undirected_incidence(handcuff(3, 3, 1)))
    assert r.match


def test_verify_2_generic(triangle):
    r = verify_theorem("2", triangle, distinct_prime_gains(3))
    assert r.match
    assert r.computed["total"] == r.claimed["total"] == 8
    assert r.computed["orientation_independent"]


def test_verify_2_hypothesis_not_met(triangle):
    r = verify_theorem("2", triangle, GainAssignment((1, 2, 2)))
    assert r.status == HYPOTHESIS_NOT_MET and r.match is None


def test_verify_main(triangle):
    assert verify_theorem("main", triangle, GainAssignment((1, 2, 2))).match
    assert verify_theorem("main", figure_eight(3, 3), GainAssignment((2, 3, 5, 7, 11, 13))).match


def test_record_json_shape(triangle):
    obj = verify_theorem("A", triangle, Orientation((True, False, False))).to_json()
    assert set(obj) == {"theorem", "name", "instance", "claimed", "computed", "match", "status", "witness"}
    assert obj["instance"] == {"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]], "flips": [True, False, False]}
    json.dumps(obj)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("Z", complete_graph(3))
