import pytest

from src.core.rotations import (
    active_graph,
    eliminate,
    fixed_edges,
    is_unique,
    matching_rank,
    rotation_set,
    rotation_union,
    rotations_between,
    rotations_of,
    trace,
    union_graph,
)
from src.models.models import OrderError, Rotation, RotationError, UnstableMatchingError
from tests.helpers import K22_MAX, K22_MIN, M1, M2, M3, ROT_C, ROT_D


def test_active_graph_at_mmin(g_right):
    gamma = active_graph(g_right, M1)
    assert gamma.active == {'1': 'c', '2': 'e', '3': "b'", '4': "d'"}
    assert gamma.active_edges <= gamma.admissible
    assert len(gamma.components) == 1
    assert gamma.components[0].cycle == ROT_C
    assert not gamma.is_forest


def test_active_graph_of_unique_matching_is_forest(g_left):
    gamma = active_graph(g_left, {'b', 'd'})
    assert gamma.active == {'1': 'c', '2': 'e'}
    assert gamma.is_forest
    assert all(c.is_tree for c in gamma.components)


def test_active_graph_requires_stable_matching(g_right):
    with pytest.raises(UnstableMatchingError):
        active_graph(g_right, {'a', 'c', "a'", "c'"})


def test_exposed_rotations(g_right):
    assert rotations_of(g_right, M1) == [ROT_C]
    assert rotations_of(g_right, M2) == [ROT_D]
    assert rotations_of(g_right, M3) == []


def test_rotation_shape():
    assert ROT_C.sequence == ("a'", "b'", "c'", "d'")
    assert len(ROT_D) == 2
    assert str(ROT_D) == 'b c d a'
    assert Rotation.canonical(('d', 'b'), ('a', 'c')) == ROT_D
    assert ROT_C < ROT_D


def test_eliminate(g_right):
    assert eliminate(g_right, M1, ROT_C) == M2
    assert eliminate(g_right, M2, ROT_D) == M3
    with pytest.raises(RotationError):
        eliminate(g_right, M1, ROT_D)


def test_trace_from_mmin_to_mmax(g_right):
    t = trace(g_right)
    assert t.matchings == (M1, M2, M3)
    assert t.rotations == (ROT_C, ROT_D)
    assert t.length == 2
    assert trace(g_right, choose='last').rotations == (ROT_C, ROT_D)
    with pytest.raises(ValueError):
        trace(g_right, choose='middle')


def test_trace_choice_does_not_change_rotation_set(k22_pair):
    primeira = trace(k22_pair, 'first')
    ultima = trace(k22_pair, 'last')
    assert primeira.rotations != ultima.rotations
    assert set(primeira.rotations) == set(ultima.rotations)


def test_matching_rank_grows_along_trace(g_right):
    assert matching_rank(g_right, M1) == 4
    assert matching_rank(g_right, M2) < matching_rank(g_right, M3)
    assert matching_rank(g_right, M3) == 9


def test_rotation_set(g_right, g_left, k22):
    assert rotation_set(g_right) == [ROT_C, ROT_D]
    assert rotation_set(g_left) == []
    assert rotation_set(k22) == [Rotation(('e11', 'e22'), ('e12', 'e21'))]


def test_fixed_edges_and_unions(g_right, g_left):
    assert fixed_edges(g_right) == frozenset()
    assert fixed_edges(g_left) == {'b', 'd'}
    assert rotation_union(g_right) == set(g_right.edge_ids) - {'e'}
    assert union_graph(g_right) == M1 | M2 | M3
    assert union_graph(g_left) == {'b', 'd'}


def test_is_unique(g_right, g_left, k22):
    assert is_unique(g_left)
    assert not is_unique(g_right)
    assert not is_unique(k22)


def test_rotations_between(g_right, k22):
    assert rotations_between(g_right, M1, M3) == (ROT_C, ROT_D)
    assert rotations_between(g_right, M2, M3) == (ROT_D,)
    assert rotations_between(g_right, M2, M2) == ()
    assert len(rotations_between(k22, K22_MIN, K22_MAX)) == 1
    with pytest.raises(OrderError):
        rotations_between(g_right, M3, M1)
