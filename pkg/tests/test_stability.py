from itertools import permutations

import pytest

from src.core.instance import build_instance, remove_vertices
from src.core.stability import (
    blocking_edges,
    covered_set,
    deferred_acceptance,
    is_stable,
    matched_edge,
    partner_map,
    require_stable,
)
from src.models.models import InstanceError, NotAMatchingError, UnstableMatchingError
from tests.helpers import K22_MAX, K22_MIN, M1, M2, M3


def test_deferred_acceptance_extremes(g_right, k22):
    assert deferred_acceptance(g_right, 'I') == M1
    assert deferred_acceptance(g_right, 'J') == M3
    assert deferred_acceptance(k22, 'I') == K22_MIN
    assert deferred_acceptance(k22, 'J') == K22_MAX


def test_deferred_acceptance_ignores_queue_order(g_right):
    for ordem in permutations(g_right.side_i):
        assert deferred_acceptance(g_right, 'I', queue_order=ordem) == M1
    for ordem in permutations(g_right.side_j):
        assert deferred_acceptance(g_right, 'J', queue_order=ordem) == M3


def test_deferred_acceptance_rejects_bad_arguments(g_right):
    with pytest.raises(ValueError):
        deferred_acceptance(g_right, 'K')
    with pytest.raises(ValueError):
        deferred_acceptance(g_right, 'I', queue_order=['1', '2'])


def test_unique_matching_on_left_fragment(g_left):
    assert deferred_acceptance(g_left, 'I') == {'b', 'd'}
    assert deferred_acceptance(g_left, 'J') == {'b', 'd'}
    menor = remove_vertices(g_left, ['v'])
    assert deferred_acceptance(menor, 'J') == {'a', 'c'}


def test_single_edge_and_empty_instances():
    unica = build_instance(['m'], ['w'], {'e': ('m', 'w')}, {'m': ['e'], 'w': ['e']})
    assert deferred_acceptance(unica) == {'e'}
    vazia = build_instance([], [], {}, {})
    assert deferred_acceptance(vazia) == frozenset()
    assert is_stable(vazia, [])


def test_stable_matchings_have_no_blocking_edges(g_right):
    for M in (M1, M2, M3):
        relatorio = blocking_edges(g_right, M)
        assert relatorio.stable
        assert relatorio.blocking == ()


def test_instability_witness(g_right):
    relatorio = blocking_edges(g_right, {'a', 'c', "a'", "c'"})
    assert not relatorio.stable
    assert relatorio.blocking == ('e',)
    assert relatorio.para_dict() == {'stable': False, 'blocking': ['e']}


def test_empty_matching_is_blocked_by_every_edge(k22):
    assert blocking_edges(k22, []).blocking == k22.edge_ids


def test_partner_map_rejects_non_matchings(g_right):
    with pytest.raises(NotAMatchingError):
        partner_map(g_right, {'b', 'c'})
    with pytest.raises(NotAMatchingError):
        partner_map(g_right, {'z'})


def test_matched_edge(g_right, g_left):
    assert matched_edge(g_right, M1, 'v') == "a'"
    assert matched_edge(g_left, {'b', 'd'}, 'v') is None
    with pytest.raises(InstanceError):
        matched_edge(g_left, {'b', 'd'}, 'z')


def test_require_stable(g_right):
    assert require_stable(g_right, M2) == M2
    with pytest.raises(UnstableMatchingError):
        require_stable(g_right, {'a', 'c', "a'", "c'"})


def test_covered_set(g_right, g_left):
    assert covered_set(g_right) == set(g_right.vertices)
    assert covered_set(g_left) == {'1', '2', 'x', 'y'}
