from fractions import Fraction

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.lattice import Relation, compare, diff_cycles, join, meet, precedes_or_equal
from src.core.oracle import all_matchings, all_stable_matchings, oracle_min_weight, oracle_precedes
from src.core.polytope import (
    characteristic_vector,
    check_polytope_membership,
    check_support_equalities,
    convex_combination,
    generalized_median,
    support_extremes,
)
from src.core.poset import (
    build_digraph,
    enumerate_stable_matchings,
    ideal_to_matching,
    matching_to_ideal,
    precedes,
)
from src.core.rotations import active_graph, eliminate, rotations_between, rotations_of, trace
from src.core.stability import deferred_acceptance, is_stable
from src.core.weights import matching_cost, min_weight_stable_matching, rotation_weight
from tests.helpers import preference_instances

PROPRIEDADE = settings(max_examples=200, deadline=None)


def _cobertos(inst, M):
    return {v for e in M for v in inst.endpoints(e)}


@PROPRIEDADE
@given(preference_instances())
def test_enumeration_matches_oracle(inst):
    estaveis = enumerate_stable_matchings(inst)
    assert len(estaveis) == len(set(estaveis))
    assert set(estaveis) == set(all_stable_matchings(inst))

    # todos os matchings estáveis cobrem o mesmo conjunto de vértices
    assert len({frozenset(_cobertos(inst, M)) for M in estaveis}) == 1

    h = build_digraph(inst)
    for M in estaveis:
        assert ideal_to_matching(inst, matching_to_ideal(inst, M, h), h) == M


@PROPRIEDADE
@given(preference_instances())
def test_rotation_order_matches_oracle(inst):
    h = build_digraph(inst)
    assert len(h) <= len(inst.edges)

    vistas = set()
    for r in h.rotations:
        assert vistas.isdisjoint(r.matching_edges)
        vistas.update(r.matching_edges)

    assert set(trace(inst, 'first').rotations) == set(trace(inst, 'last').rotations)

    estaveis = all_stable_matchings(inst)
    for C in h.rotations:
        for D in h.rotations:
            assert precedes(h, C, D) == oracle_precedes(inst, C, D, estaveis)


@PROPRIEDADE
@given(preference_instances(), st.data())
def test_min_weight_matches_oracle(inst, data):
    pesos = {
        e: Fraction(data.draw(st.integers(min_value=-10, max_value=10)))
        for e in inst.edge_ids
    }
    M, custo = min_weight_stable_matching(inst, pesos)
    assert is_stable(inst, M)
    assert custo == matching_cost(M, pesos)
    assert custo == oracle_min_weight(inst, pesos)[1]

    # c(M) = c(Mmin) + Σ c^R sobre as rotações eliminadas até M
    mmin = deferred_acceptance(inst, 'I')
    base = matching_cost(mmin, pesos)
    for L in all_stable_matchings(inst):
        soma = sum((rotation_weight(r, pesos) for r in rotations_between(inst, mmin, L)), Fraction(0))
        assert matching_cost(L, pesos) == base + soma


@PROPRIEDADE
@given(preference_instances())
def test_lattice_laws(inst):
    estaveis = all_stable_matchings(inst)[:6]
    mmin, mmax = deferred_acceptance(inst, 'I'), deferred_acceptance(inst, 'J')
    for M in estaveis:
        assert precedes_or_equal(inst, mmin, M)
        assert precedes_or_equal(inst, M, mmax)
        assert meet(inst, M, M) == M and join(inst, M, M) == M
        for L in estaveis:
            inf, sup = meet(inst, M, L), join(inst, M, L)
            assert is_stable(inst, inf) and is_stable(inst, sup)
            assert inf == meet(inst, L, M) and sup == join(inst, L, M)
            assert precedes_or_equal(inst, inf, M) and precedes_or_equal(inst, inf, L)
            assert precedes_or_equal(inst, M, sup) and precedes_or_equal(inst, L, sup)
            assert meet(inst, M, join(inst, M, L)) == M
            assert join(inst, M, meet(inst, M, L)) == M
            if compare(inst, M, L) == Relation.PRECEDES:
                assert inf == M and sup == L


@PROPRIEDADE
@given(preference_instances())
def test_lattice_is_distributive(inst):
    estaveis = all_stable_matchings(inst)[:5]
    for M in estaveis:
        for L in estaveis:
            for N in estaveis:
                assert meet(inst, M, meet(inst, L, N)) == meet(inst, meet(inst, M, L), N)
                assert join(inst, M, join(inst, L, N)) == join(inst, join(inst, M, L), N)
                assert meet(inst, M, join(inst, L, N)) == join(inst, meet(inst, M, L), meet(inst, M, N))
                assert join(inst, M, meet(inst, L, N)) == meet(inst, join(inst, M, L), join(inst, M, N))


@PROPRIEDADE
@given(preference_instances())
def test_ideals_follow_meet_and_join(inst):
    h = build_digraph(inst)
    estaveis = all_stable_matchings(inst)[:6]
    ideais = {M: matching_to_ideal(inst, M, h) for M in estaveis}
    for M in estaveis:
        for L in estaveis:
            assert matching_to_ideal(inst, meet(inst, M, L), h) == ideais[M] & ideais[L]
            assert matching_to_ideal(inst, join(inst, M, L), h) == ideais[M] | ideais[L]


@PROPRIEDADE
@given(preference_instances())
def test_tree_components_only_move_down(inst):
    # arestas de M em componentes-árvore de Γ(M) ficam em L ou descem com ele
    estaveis = all_stable_matchings(inst)
    for M in estaveis[:6]:
        arvores = {
            e for comp in active_graph(inst, M).components if comp.is_tree
            for e in comp.edges if e in M
        }
        for L in estaveis:
            descendo = {
                e for ciclo in diff_cycles(inst, M, L) if not ciclo.raising
                for e in ciclo.first_edges
            }
            assert arvores <= L | descendo


@PROPRIEDADE
@given(preference_instances())
def test_cover_arcs_have_witness(inst):
    # para C coberto por D: algum M expõe C e não D, e D fica exposta ao eliminar C
    h = build_digraph(inst)
    estaveis = all_stable_matchings(inst)
    expostas = {M: set(rotations_of(inst, M)) for M in estaveis}
    for c, d in nx.transitive_reduction(h.graph).edges():
        assert h.graph.has_edge(c, d)
        C, D = h.rotations[c], h.rotations[d]
        assert any(
            C in expostas[M] and D not in expostas[M]
            and D in rotations_of(inst, eliminate(inst, M, C))
            for M in estaveis
        )

@PROPRIEDADE
@given(preference_instances(), st.data())
def test_generalized_median_family(inst, data):
    estaveis = all_stable_matchings(inst)
    familia = data.draw(st.lists(st.sampled_from(estaveis), min_size=1, max_size=5))
    medianas = [generalized_median(inst, familia, k) for k in range(1, len(familia) + 1)]
    for A in medianas:
        assert is_stable(inst, A)
    for A, B in zip(medianas, medianas[1:]):
        assert precedes_or_equal(inst, A, B)


@PROPRIEDADE
@given(preference_instances(), st.data())
def test_convex_combinations_satisfy_polytope(inst, data):
    estaveis = all_stable_matchings(inst)
    escolhidos = data.draw(st.lists(st.sampled_from(estaveis), min_size=1, max_size=4))
    pesos = [Fraction(data.draw(st.integers(min_value=1, max_value=5))) for _ in escolhidos]
    total = sum(pesos)
    x = convex_combination([(p / total, M) for p, M in zip(pesos, escolhidos)], inst)

    assert check_polytope_membership(inst, x).passed
    assert check_support_equalities(inst, x).passed
    M, L = support_extremes(inst, x)
    assert is_stable(inst, M) and is_stable(inst, L)


@PROPRIEDADE
@given(preference_instances())
def test_unstable_matchings_violate_gamma(inst):
    for M in all_matchings(inst)[:40]:
        if is_stable(inst, M):
            continue
        relatorio = check_polytope_membership(inst, characteristic_vector(M, inst))
        assert not relatorio.check('gamma').passed

