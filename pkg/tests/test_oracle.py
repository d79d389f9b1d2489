import pytest

from src.core.instance import build_instance, random_instance
from src.core.oracle import all_matchings, all_stable_matchings, oracle_min_weight, oracle_precedes
from src.core.poset import build_digraph
from src.core.weights import egalitarian_weights
from src.models.models import OracleLimitError
from tests.helpers import M1, M2, M3, ROT_C, ROT_D


def test_all_stable_matchings(g_right, g_left):
    # ordem das listas ordenadas de ids: "a" < "a'" < "b"
    assert all_stable_matchings(g_right) == [M3, M1, M2]
    assert all_stable_matchings(g_left) == [frozenset({'b', 'd'})]


def test_empty_instance_has_only_the_empty_matching():
    vazia = build_instance([], [], {}, {})
    assert all_stable_matchings(vazia) == [frozenset()]


def test_all_matchings_of_k22(k22):
    # ∅, quatro arestas isoladas e dois matchings perfeitos
    assert len(all_matchings(k22)) == 7


def test_size_guard():
    grande = random_instance(5, 5, density=1.0, seed=3)
    assert len(grande.edges) == 25
    with pytest.raises(OracleLimitError):
        all_stable_matchings(grande)


def test_oracle_min_weight(g_right, g_left, k22):
    assert oracle_min_weight(g_right, egalitarian_weights(g_right)) == (M2, 12)
    assert oracle_min_weight(g_left, egalitarian_weights(g_left))[0] == {'b', 'd'}
    assert oracle_min_weight(k22, egalitarian_weights(k22))[1] == 6


def test_oracle_precedes(g_right, k22_pair):
    assert oracle_precedes(g_right, ROT_C, ROT_D)
    assert not oracle_precedes(g_right, ROT_D, ROT_C)
    assert not oracle_precedes(g_right, ROT_C, ROT_C)
    C1, C2 = build_digraph(k22_pair).rotations
    assert not oracle_precedes(k22_pair, C1, C2)
    assert not oracle_precedes(k22_pair, C2, C1)
