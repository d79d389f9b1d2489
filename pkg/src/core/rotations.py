# ========================================
# MOTOR DE ROTAÇÕES
# Grafos ativos Γ(M), rotações, trassas Mmin → Mmax e conjuntos derivados
# ========================================

import logging
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from src.core.lattice import Relation, compare
from src.core.stability import deferred_acceptance, partner_map, require_stable
from src.models.models import (
    SIDE_I,
    SIDE_J,
    ActiveComponent,
    ActiveGraph,
    Matching,
    MatchingError,
    OrderError,
    PreferenceInstance,
    Rotation,
    RotationError,
    Trace,
)

logger = logging.getLogger(__name__)


def _is_admissible(inst: PreferenceInstance, parceiros: Dict[str, str], a: str) -> bool:
    # m tem em M uma aresta melhor que a; w está livre ou tem em M uma aresta pior que a
    m, w = inst.endpoints(a)
    em = parceiros.get(m)
    if em is None or em == a or not inst.prefers(m, em, a):
        return False
    ew = parceiros.get(w)
    return ew is None or inst.prefers(w, a, ew)


def _active_edges(inst: PreferenceInstance, parceiros: Dict[str, str]) -> Dict[str, str]:
    """Para cada m ∈ I coberto, a primeira aresta admissível depois de M(m)."""
    ativas = {}
    for m in inst.side_i:
        em = parceiros.get(m)
        if em is None:
            continue
        lista = inst.prefs[m]
        for a in lista[inst.rank(m, em):]:
            if _is_admissible(inst, parceiros, a):
                ativas[m] = a
                break
    return ativas


def _cycles(inst: PreferenceInstance, parceiros: Dict[str, str],
            ativas: Dict[str, str]) -> List[Rotation]:
    # grafo funcional em I: m -> dono (em I) da aresta de M no extremo J da aresta ativa
    def seguinte(m):
        a = ativas.get(m)
        if a is None:
            return None
        e = parceiros.get(inst.other_end(a, m))
        return None if e is None else inst.endpoints(e)[0]

    estado: Dict[str, int] = {}                 # 1 = no caminho atual, 2 = concluído
    rotacoes = []
    for origem in inst.side_i:
        if origem in estado:
            continue
        caminho = []
        m = origem
        while m is not None and m not in estado:
            estado[m] = 1
            caminho.append(m)
            m = seguinte(m)
        if m is not None and estado[m] == 1:
            ciclo = caminho[caminho.index(m):]
            rotacoes.append(Rotation.canonical(
                [parceiros[x] for x in ciclo],
                [ativas[x] for x in ciclo],
            ))
        for x in caminho:
            estado[x] = 2
    return sorted(rotacoes)


def _exposed_rotations(inst: PreferenceInstance, M: Matching) -> List[Rotation]:
    parceiros = partner_map(inst, M)
    return _cycles(inst, parceiros, _active_edges(inst, parceiros))


def _apply(M: Matching, R: Rotation) -> Matching:
    return frozenset((set(M) - set(R.matching_edges)) | set(R.active_edges))


# ========================================
# GRAFO ATIVO
# ========================================
def active_graph(inst: PreferenceInstance, M: Iterable[str]) -> ActiveGraph:
    """
    Constrói Γ(M): arestas de M mais as arestas ativas, com as componentes
    rotuladas como árvore ou contendo um (único) ciclo.
    """
    M = require_stable(inst, M)
    parceiros = partner_map(inst, M)
    admissiveis = frozenset(
        a for a in inst.edge_ids if a not in M and _is_admissible(inst, parceiros, a)
    )
    ativas = _active_edges(inst, parceiros)
    rotacoes = _cycles(inst, parceiros, ativas)

    g = nx.Graph()
    g.add_nodes_from(inst.vertices)
    for e in list(M) + list(ativas.values()):
        g.add_edge(*inst.endpoints(e), edge=e)

    por_vertice = {}
    for r in rotacoes:
        por_vertice[inst.endpoints(r.matching_edges[0])[0]] = r

    componentes = []
    for vertices in nx.connected_components(g):
        vertices = frozenset(vertices)
        arestas = frozenset(d['edge'] for _, _, d in g.subgraph(vertices).edges(data=True))
        ciclo = next((r for v, r in por_vertice.items() if v in vertices), None)
        componentes.append(ActiveComponent(vertices, arestas, ciclo))
    componentes.sort(key=lambda c: min(c.vertices))

    return ActiveGraph(
        matching=M,
        admissible=admissiveis,
        active=ativas,
        components=tuple(componentes),
    )


def rotations_of(inst: PreferenceInstance, M: Iterable[str]) -> List[Rotation]:
    """Rotações expostas em M, uma por componente com ciclo, em ordem canônica."""
    M = require_stable(inst, M)
    return _exposed_rotations(inst, M)


def eliminate(inst: PreferenceInstance, M: Iterable[str], R: Rotation) -> Matching:
    """Troca M ao longo da rotação R; o resultado é estável e estritamente acima de M."""
    M = frozenset(M)
    if R not in rotations_of(inst, M):
        raise RotationError(f'a rotação {R} não está exposta no matching')
    return _apply(M, R)


# ========================================
# TRASSAS E CONJUNTO DE ROTAÇÕES
# ========================================
def matching_rank(inst: PreferenceInstance, M: Iterable[str]) -> int:
    """ρ(M): soma, sobre m ∈ I coberto, da posição da aresta de M em δ(m)."""
    parceiros = partner_map(inst, M)
    return sum(inst.rank(m, parceiros[m]) for m in inst.side_i if m in parceiros)


def trace(inst: PreferenceInstance, choose: str = 'first') -> Trace:
    """
    Cadeia maximal de eliminações de Mmin até Mmax.
    choose='first' elimina sempre a rotação canonicamente menor; 'last', a maior.
    """
    if choose not in ('first', 'last'):
        raise ValueError(f'escolha inválida: {choose!r}')
    atual = deferred_acceptance(inst, SIDE_I)
    matchings = [atual]
    rotacoes = []
    posto = matching_rank(inst, atual)
    while True:
        expostas = _exposed_rotations(inst, atual)
        if not expostas:
            break
        r = expostas[0] if choose == 'first' else expostas[-1]
        atual = _apply(atual, r)
        novo_posto = matching_rank(inst, atual)
        if novo_posto <= posto:
            raise MatchingError('o posto não cresceu ao longo da trassa')
        posto = novo_posto
        matchings.append(atual)
        rotacoes.append(r)
        logger.debug('rotação eliminada: %s (posto %d)', r, posto)

    if atual != deferred_acceptance(inst, SIDE_J):
        raise MatchingError('a trassa não terminou em Mmax')
    return Trace(tuple(matchings), tuple(rotacoes))


def rotation_set(inst: PreferenceInstance) -> List[Rotation]:
    """R_G em ordem canônica (independe da trassa usada)."""
    rotacoes = sorted(set(trace(inst).rotations))
    logger.info('%d rotações em R_G', len(rotacoes))
    return rotacoes


def fixed_edges(inst: PreferenceInstance) -> frozenset:
    """Arestas presentes em todo matching estável."""
    mmin = deferred_acceptance(inst, SIDE_I)
    moveis = set()
    for r in rotation_set(inst):
        moveis.update(r.matching_edges)
    return frozenset(mmin - moveis)


def rotation_union(inst: PreferenceInstance) -> frozenset:
    """U_G: união das arestas de todas as rotações."""
    arestas = set()
    for r in rotation_set(inst):
        arestas.update(r.sequence)
    return frozenset(arestas)


def union_graph(inst: PreferenceInstance) -> frozenset:
    """Σ_G: união de todos os matchings estáveis = Mmin ∪ U_G."""
    return frozenset(deferred_acceptance(inst, SIDE_I) | rotation_union(inst))


def is_unique(inst: PreferenceInstance) -> bool:
    """Há um único matching estável sse Γ(Mmin) é uma floresta."""
    return not _exposed_rotations(inst, deferred_acceptance(inst, SIDE_I))


def rotations_between(inst: PreferenceInstance, M: Iterable[str],
                      M_prime: Iterable[str]) -> Tuple[Rotation, ...]:
    """
    ℛ_{M,M′}: rotações eliminadas de M até M′, na ordem de uma trassa.
    Em cada passo escolhe a rotação exposta cujas arestas de matching saem de M′.
    """
    M = require_stable(inst, M, 'M')
    M_prime = require_stable(inst, M_prime, "M'")
    if compare(inst, M, M_prime) not in (Relation.EQUAL, Relation.PRECEDES):
        raise OrderError("M não precede M'")

    atual = M
    rotacoes = []
    while atual != M_prime:
        escolhida: Optional[Rotation] = None
        for r in _exposed_rotations(inst, atual):
            if all(e not in M_prime for e in r.matching_edges):
                escolhida = r
                break
        if escolhida is None:
            raise OrderError("não há caminho de rotações de M até M'")
        atual = _apply(atual, escolhida)
        rotacoes.append(escolhida)
    return tuple(rotacoes)
