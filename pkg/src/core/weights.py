# ========================================
# MATCHING ESTÁVEL DE PESO MÍNIMO
# Pesos de rotações e redução fecho mínimo → corte mínimo
# ========================================

import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

import networkx as nx

from src.core.poset import build_digraph, ideal_to_matching
from src.core.stability import deferred_acceptance
from src.models.models import (
    SIDE_I,
    ClosureInstance,
    FlowNetwork,
    FormatError,
    Matching,
    MatchingError,
    PreferenceInstance,
    Rotation,
    RotationDigraph,
)
from src.utils.flow_utils import max_flow_min_cut
from src.utils.format_utils import parse_weight_file

logger = logging.getLogger(__name__)

_SOURCE = 's'
_SINK = 't'


# ========================================
# FUNÇÕES DE PESO
# ========================================
def egalitarian_weights(inst: PreferenceInstance) -> Dict[str, Fraction]:
    """c(e) = posição de e em I + posição de e em J (começando em 1)."""
    pesos = {}
    for e, (m, w) in inst.edges.items():
        pesos[e] = Fraction(inst.rank(m, e) + inst.rank(w, e))
    return pesos


def load_weights(text: str, inst: PreferenceInstance) -> Dict[str, Fraction]:
    """
    Lê um arquivo de pesos "w <aresta> <decimal>".
    Arestas ausentes recebem peso 0 (com aviso); arestas desconhecidas são erro.
    """
    pesos = parse_weight_file(text)
    desconhecidas = sorted(set(pesos) - set(inst.edges))
    if desconhecidas:
        raise FormatError(f'aresta desconhecida no arquivo de pesos: {desconhecidas[0]}')
    ausentes = [e for e in inst.edge_ids if e not in pesos]
    if ausentes:
        logger.warning('%d arestas sem peso; usando 0: %s', len(ausentes), ' '.join(ausentes))
        for e in ausentes:
            pesos[e] = Fraction(0)
    return pesos


def _peso(c: Mapping[str, Fraction], e: str) -> Fraction:
    try:
        return Fraction(c[e])
    except KeyError:
        raise MatchingError(f'peso ausente para a aresta {e}') from None


def rotation_weight(R: Rotation, c: Mapping[str, Fraction]) -> Fraction:
    """c^R = Σ c(a_i) − Σ c(e_i)."""
    return (sum((_peso(c, a) for a in R.active_edges), Fraction(0))
            - sum((_peso(c, e) for e in R.matching_edges), Fraction(0)))


def matching_cost(M: Iterable[str], c: Mapping[str, Fraction]) -> Fraction:
    return sum((_peso(c, e) for e in M), Fraction(0))


# ========================================
# FECHO DE PESO MÍNIMO
# ========================================
def min_weight_closure(Q: ClosureInstance) -> Tuple[FrozenSet[object], Fraction]:
    """
    Conjunto fechado X (nenhum arco entra em X vindo de fora) de peso mínimo.
    Componentes fortemente conexas são contraídas; X é o lado do sumidouro do
    corte mínimo. Entre os ótimos, devolve o menor (por inclusão).
    Retorna: (X, ζ(X))
    """
    g = nx.DiGraph()
    g.add_nodes_from(Q.nodes)
    g.add_edges_from(Q.arcs)
    if g.number_of_nodes() != len(Q.nodes):
        raise MatchingError('arco com extremo fora dos nós do fecho')

    condensado = nx.condensation(g)
    membros = {k: frozenset(dados['members']) for k, dados in condensado.nodes(data=True)}
    zeta = {k: sum((Fraction(Q.weights.get(v, 0)) for v in grupo), Fraction(0))
            for k, grupo in membros.items()}

    # nós da rede: componentes (inteiros) mais fonte e sumidouro
    arcos = []
    for k, z in zeta.items():
        if z > 0:
            arcos.append((_SOURCE, k, z))
        elif z < 0:
            arcos.append((k, _SINK, -z))
    for u, v in condensado.edges():
        arcos.append((u, v, None))
    rede = FlowNetwork(
        nodes=(_SOURCE, _SINK) + tuple(sorted(membros)),
        arcs=tuple(arcos),
        source=_SOURCE,
        sink=_SINK,
    )
    corte = max_flow_min_cut(rede, maximal_source_side=True)

    X = frozenset(v for k, grupo in membros.items() if k not in corte.source_side for v in grupo)
    peso = sum((Fraction(Q.weights.get(v, 0)) for v in X), Fraction(0))
    negativos = sum((z for z in zeta.values() if z < 0), Fraction(0))
    if peso != corte.value + negativos:
        raise MatchingError('peso do fecho difere de corte + ζ(V⁻)')
    logger.debug('fecho mínimo com %d nós, peso %s', len(X), peso)
    return X, peso


def closure_of_digraph(digraph: RotationDigraph, c: Mapping[str, Fraction]) -> ClosureInstance:
    """Q = (H, c^R): os ideais de H são exatamente os conjuntos fechados."""
    return ClosureInstance(
        nodes=tuple(range(len(digraph))),
        arcs=tuple(sorted(digraph.arcs)),
        weights={k: rotation_weight(r, c) for k, r in enumerate(digraph.rotations)},
    )


# ========================================
# MATCHING ESTÁVEL ÓTIMO
# ========================================
def min_weight_stable_matching(inst: PreferenceInstance, c: Mapping[str, Fraction],
                               digraph: Optional[RotationDigraph] = None) -> Tuple[Matching, Fraction]:
    """
    c(M) = c(Mmin) + Σ_{R ∈ ℛ_M} c^R: minimizar c sobre matchings estáveis
    equivale a um fecho de peso mínimo em H.
    """
    for e in inst.edge_ids:
        _peso(c, e)
    if digraph is None:
        digraph = build_digraph(inst)

    X, peso = min_weight_closure(closure_of_digraph(digraph, c))
    M = ideal_to_matching(inst, X, digraph)
    custo = matching_cost(M, c)
    base = matching_cost(deferred_acceptance(inst, SIDE_I), c)
    if custo != base + peso:
        raise MatchingError('custo do matching difere de c(Mmin) + Σ c^R')
    logger.info('matching de peso mínimo: custo %s, %d rotações', custo, len(X))
    return M, custo


def max_weight_stable_matching(inst: PreferenceInstance, c: Mapping[str, Fraction],
                               digraph: Optional[RotationDigraph] = None) -> Tuple[Matching, Fraction]:
    negado = {e: -_peso(c, e) for e in inst.edge_ids}
    M, _ = min_weight_stable_matching(inst, negado, digraph)
    return M, matching_cost(M, c)
