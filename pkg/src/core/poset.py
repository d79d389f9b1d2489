# ========================================
# POSET DE ROTAÇÕES
# Dígrafo gerador H, relação ⋖ por alcançabilidade e a bijeção ideal ↔ matching
# ========================================

import logging
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx

from src.core.rotations import eliminate, rotation_set, rotations_between
from src.core.stability import deferred_acceptance, require_stable
from src.models.models import (
    ARC_SHARED_VERTEX,
    ARC_SUCCESSOR_RULE,
    SIDE_I,
    SIDE_J,
    CapExceededError,
    Ideal,
    Matching,
    MatchingError,
    NotAnIdealError,
    PreferenceInstance,
    Rotation,
    RotationDigraph,
)

logger = logging.getLogger(__name__)

RotationRef = Union[Rotation, int]


# ========================================
# CONSTRUÇÃO DO DÍGRAFO H
# ========================================
def build_digraph(inst: PreferenceInstance,
                  rotations: Optional[List[Rotation]] = None) -> RotationDigraph:
    """
    Arcos de dois tipos:
      - shared-vertex: rotações que passam por um mesmo vértice v, em sucessão
        (ordem de <_v para v em I, ordem inversa para v em J), pares consecutivos;
      - successor-rule: D leva m' da aresta e' para a aresta ativa a'; para cada aresta
        b = m'w estritamente entre e' e a' em δ(m'), a rotação C que leva w de uma
        aresta pior que b para uma melhor que b precede D.
    """
    if rotations is None:
        rotations = rotation_set(inst)
    rotacoes = tuple(sorted(rotations))
    arcos: Dict[Tuple[int, int], str] = {}

    # (índice, aresta de matching no vértice) por vértice
    por_vertice: Dict[str, List[Tuple[int, str]]] = {}
    # vértice J -> [(índice, aresta de matching em w, aresta ativa em w)]
    travessias: Dict[str, List[Tuple[int, str, str]]] = {}
    for k, r in enumerate(rotacoes):
        n = len(r)
        for i, e in enumerate(r.matching_edges):
            m, w = inst.endpoints(e)
            por_vertice.setdefault(m, []).append((k, e))
            por_vertice.setdefault(w, []).append((k, e))
            travessias.setdefault(w, []).append((k, e, r.active_edges[(i - 1) % n]))

    for v, lista in por_vertice.items():
        if inst.is_i(v):
            lista.sort(key=lambda par: inst.rank(v, par[1]))
        else:
            lista.sort(key=lambda par: -inst.rank(v, par[1]))
        for (c, _), (d, _) in zip(lista, lista[1:]):
            arcos[(c, d)] = ARC_SHARED_VERTEX

    for d, r in enumerate(rotacoes):
        for e_linha, a_linha in zip(r.matching_edges, r.active_edges):
            m_linha = inst.endpoints(e_linha)[0]
            entre = inst.prefs[m_linha][inst.rank(m_linha, e_linha):inst.rank(m_linha, a_linha) - 1]
            for b in entre:
                w = inst.endpoints(b)[1]
                for c, e, a in travessias.get(w, ()):
                    if c != d and inst.prefers(w, a, b) and inst.prefers(w, b, e):
                        arcos.setdefault((c, d), ARC_SUCCESSOR_RULE)

    digrafo = RotationDigraph(rotacoes, arcos)
    if not nx.is_directed_acyclic_graph(digrafo.graph):
        raise MatchingError('o dígrafo de rotações contém um ciclo')
    logger.info('dígrafo H: %d rotações, %d arcos', len(rotacoes), len(arcos))
    return digrafo


def _as_index(digraph: RotationDigraph, ref: RotationRef) -> int:
    if isinstance(ref, Rotation):
        return digraph.index_of(ref)
    if not 0 <= ref < len(digraph):
        raise MatchingError(f'índice de rotação inválido: {ref}')
    return ref


def precedes(digraph: RotationDigraph, C: RotationRef, D: RotationRef) -> bool:
    """C ⋖ D sse D é alcançável a partir de C em H (irreflexiva)."""
    c, d = _as_index(digraph, C), _as_index(digraph, D)
    if c == d:
        return False
    return nx.has_path(digraph.graph, c, d)


# ========================================
# IDEAIS ↔ MATCHINGS
# ========================================
def _check_ideal(digraph: RotationDigraph, S: Iterable[int]) -> Ideal:
    S = frozenset(_as_index(digraph, k) for k in S)
    for k in S:
        for p in digraph.graph.predecessors(k):
            if p not in S:
                raise NotAnIdealError(
                    f'não é um ideal: R{p} precede R{k} mas está fora do conjunto')
    return S


def matching_to_ideal(inst: PreferenceInstance, M: Iterable[str],
                      digraph: Optional[RotationDigraph] = None) -> Ideal:
    """ℛ_M: rotações eliminadas de Mmin até M."""
    if digraph is None:
        digraph = build_digraph(inst)
    mmin = deferred_acceptance(inst, SIDE_I)
    return frozenset(digraph.index_of(r) for r in rotations_between(inst, mmin, M))


def ideal_to_matching(inst: PreferenceInstance, S: Iterable[RotationRef],
                      digraph: Optional[RotationDigraph] = None) -> Matching:
    """Elimina as rotações de S a partir de Mmin numa extensão linear de ⋖."""
    if digraph is None:
        digraph = build_digraph(inst)
    S = _check_ideal(digraph, S)
    atual = deferred_acceptance(inst, SIDE_I)
    for k in nx.lexicographical_topological_sort(digraph.graph.subgraph(S)):
        atual = eliminate(inst, atual, digraph.rotations[k])
    return atual


def _matching_of(mmin: Matching, digraph: RotationDigraph, S: Ideal) -> Matching:
    # as arestas de matching de rotações distintas são disjuntas, logo a
    # composição das eliminações é (Mmin ∪ ativas(S)) − matching(S)
    ativas, saem = set(), set()
    for k in S:
        r = digraph.rotations[k]
        ativas.update(r.active_edges)
        saem.update(r.matching_edges)
    return frozenset((set(mmin) | ativas) - saem)


def iter_ideals(digraph: RotationDigraph) -> Iterator[Ideal]:
    """
    Gera cada ideal de H exatamente uma vez.
    Percorre uma ordem topológica decidindo incluir/excluir cada rotação; incluir só
    é permitido quando todos os predecessores já estão no conjunto.
    """
    g = digraph.graph
    ordem = list(nx.lexicographical_topological_sort(g))
    predecessores = {k: frozenset(g.predecessors(k)) for k in ordem}
    n = len(ordem)
    pilha: List[Tuple[int, Ideal]] = [(0, frozenset())]
    while pilha:
        pos, atual = pilha.pop()
        if pos == n:
            yield atual
            continue
        k = ordem[pos]
        pilha.append((pos + 1, atual))
        if predecessores[k] <= atual:
            pilha.append((pos + 1, atual | {k}))


def _ideal_key(S: Ideal):
    return tuple(sorted(S))


def _walk_ideals(digraph: RotationDigraph, cap: Optional[int],
                 progress: Optional[Callable[[int], None]]) -> Iterator[Ideal]:
    # limite e progresso comuns a enumerate e count
    if cap is not None and cap < 1:
        raise ValueError('cap deve ser positivo')
    total = 0
    for S in iter_ideals(digraph):
        total += 1
        if cap is not None and total > cap:
            raise CapExceededError(cap, total)
        if progress is not None:
            progress(total)
        yield S


def enumerate_stable_matchings(inst: PreferenceInstance, cap: Optional[int] = None,
                               digraph: Optional[RotationDigraph] = None,
                               progress: Optional[Callable[[int], None]] = None) -> List[Matching]:
    """
    Todos os matchings estáveis, cada um uma vez, na ordem lexicográfica dos
    conjuntos ordenados de índices de rotações.
    `progress`, se dado, recebe a quantidade de ideais gerados até o momento.
    Levanta CapExceededError se houver mais de `cap` matchings.
    """
    if digraph is None:
        digraph = build_digraph(inst)
    ideais = sorted(_walk_ideals(digraph, cap, progress), key=_ideal_key)
    mmin = deferred_acceptance(inst, SIDE_I)
    return [_matching_of(mmin, digraph, S) for S in ideais]


def count_stable_matchings(inst: PreferenceInstance, cap: Optional[int] = None,
                           digraph: Optional[RotationDigraph] = None,
                           progress: Optional[Callable[[int], None]] = None) -> int:
    """Conta ideais de H (pior caso exponencial)."""
    if digraph is None:
        digraph = build_digraph(inst)
    total = sum(1 for _ in _walk_ideals(digraph, cap, progress))
    logger.info('%d matchings estáveis', total)
    return total


def antichain_of(digraph: RotationDigraph, S: Iterable[RotationRef]) -> frozenset:
    """Elementos maximais do ideal S sob ⋖."""
    S = _check_ideal(digraph, S)
    return frozenset(k for k in S if not any(j in S for j in digraph.graph.successors(k)))


def ideal_generated_by(digraph: RotationDigraph, rotations: Iterable[RotationRef]) -> Ideal:
    """Fecho para baixo de um conjunto de rotações."""
    ideal = set()
    for ref in rotations:
        k = _as_index(digraph, ref)
        ideal.add(k)
        ideal.update(nx.ancestors(digraph.graph, k))
    return frozenset(ideal)


def rotations_after(inst: PreferenceInstance, M: Iterable[str]) -> Tuple[Rotation, ...]:
    """ℛ⁺_M: rotações que ainda faltam eliminar de M até Mmax."""
    return rotations_between(inst, require_stable(inst, M), deferred_acceptance(inst, SIDE_J))


# ========================================
# EXPORTAÇÃO DOT
# ========================================
def _quote(texto: str) -> str:
    return '"' + texto.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(digraph: RotationDigraph) -> str:
    linhas = ['digraph rotations {', '\tnode [shape=box];']
    for k, r in enumerate(digraph.rotations):
        rotulo = f'R{k}: [{" ".join(r.matching_edges)}]'
        linhas.append(f'\tR{k} [label={_quote(rotulo)}];')
    for (c, d) in sorted(digraph.arcs):
        linhas.append(f'\tR{c} -> R{d} [label={_quote(digraph.arcs[(c, d)])}];')
    linhas.append('}')
    return '\n'.join(linhas) + '\n'
