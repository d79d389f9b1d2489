# ========================================
# OPERAÇÕES DE RETICULADO
# Ciclos de M△L, classificação e ínfimo/supremo sob ≺
# ========================================

import logging
from enum import Enum
from typing import Iterable, List

from src.core.stability import partner_map, require_stable
from src.models.models import (
    AlternatingCycle,
    Matching,
    MatchingError,
    PreferenceInstance,
    UnstableMatchingError,
)

logger = logging.getLogger(__name__)


class Relation(str, Enum):
    EQUAL = 'equal'
    PRECEDES = 'M<L'            # M ≺ L
    SUCCEEDS = 'L<M'            # L ≺ M
    INCOMPARABLE = 'incomparable'


def diff_cycles(inst: PreferenceInstance, M: Iterable[str], L: Iterable[str]) -> List[AlternatingCycle]:
    """
    Decompõe M△L em ciclos alternantes disjuntos nos vértices.
    Cada ciclo começa pela sua menor aresta de M e segue pela aresta de L no
    mesmo vértice de I; é classificado como raising (L acima de M) ou lowering.
    """
    M = require_stable(inst, M, 'M')
    L = require_stable(inst, L, 'L')
    em_m = partner_map(inst, M)
    em_l = partner_map(inst, L)
    so_m = sorted(M - L)
    so_l = set(L - M)

    ciclos = []
    visitadas = set()
    for inicio in so_m:
        if inicio in visitadas:
            continue
        arestas, vertices = [], set()
        e = inicio
        while True:
            m, w = inst.endpoints(e)
            f = em_l.get(m)
            if f is None or f == e:
                raise UnstableMatchingError('M△L contém um caminho, não só ciclos')
            w_seguinte = inst.other_end(f, m)
            arestas.extend((e, f))
            vertices.update((m, w))
            visitadas.add(e)
            so_l.discard(f)
            e = em_m.get(w_seguinte)
            if e is None:
                raise UnstableMatchingError('M△L contém um caminho, não só ciclos')
            if e == inicio:
                break

        ciclo = _classify(inst, tuple(arestas), frozenset(vertices))
        ciclos.append(ciclo)

    if so_l:
        raise UnstableMatchingError('M△L contém um caminho, não só ciclos')
    return ciclos


def _classify(inst, arestas, vertices) -> AlternatingCycle:
    # sentido uniforme ao longo do ciclo
    sentidos = set()
    for e, f in zip(arestas[0::2], arestas[1::2]):
        m = inst.endpoints(e)[0]
        sentidos.add(inst.prefers(m, e, f))
    if len(sentidos) != 1:
        raise MatchingError('ciclo alternante sem sentido uniforme')
    return AlternatingCycle(edges=arestas, vertices=vertices, raising=sentidos.pop())


def replace_along(M: Iterable[str], cycles: Iterable[AlternatingCycle]) -> Matching:
    """
    Troca as arestas de M ao longo de cada ciclo escolhido.
    O resultado é sempre um matching, mas não necessariamente estável.
    """
    M = frozenset(M)
    usados = set()
    resultado = set(M)
    for ciclo in cycles:
        if usados & ciclo.vertices:
            raise MatchingError('ciclos sobrepostos')
        usados |= ciclo.vertices
        if not set(ciclo.first_edges) <= M or set(ciclo.second_edges) & M:
            raise MatchingError('ciclo não alterna em relação a M')
        resultado.difference_update(ciclo.first_edges)
        resultado.update(ciclo.second_edges)
    return frozenset(resultado)


def meet(inst: PreferenceInstance, M: Iterable[str], L: Iterable[str]) -> Matching:
    """M ∧ L: troca ao longo de todos os ciclos lowering."""
    M = frozenset(M)
    ciclos = diff_cycles(inst, M, L)
    return replace_along(M, [c for c in ciclos if not c.raising])


def join(inst: PreferenceInstance, M: Iterable[str], L: Iterable[str]) -> Matching:
    """M ∨ L: troca ao longo de todos os ciclos raising."""
    M = frozenset(M)
    ciclos = diff_cycles(inst, M, L)
    return replace_along(M, [c for c in ciclos if c.raising])


def compare(inst: PreferenceInstance, M: Iterable[str], L: Iterable[str]) -> Relation:
    """Compara aresta a aresta nos vértices cobertos de I."""
    M = require_stable(inst, M, 'M')
    L = require_stable(inst, L, 'L')
    em_m = partner_map(inst, M)
    em_l = partner_map(inst, L)

    m_melhor = l_melhor = False
    for m in inst.side_i:
        e, f = em_m.get(m), em_l.get(m)
        if e is None or e == f:
            continue
        if inst.prefers(m, e, f):
            m_melhor = True
        else:
            l_melhor = True

    if m_melhor and l_melhor:
        return Relation.INCOMPARABLE
    if m_melhor:
        return Relation.PRECEDES
    if l_melhor:
        return Relation.SUCCEEDS
    return Relation.EQUAL


def precedes_or_equal(inst: PreferenceInstance, M: Iterable[str], L: Iterable[str]) -> bool:
    return compare(inst, M, L) in (Relation.EQUAL, Relation.PRECEDES)
