# ========================================
# ESTABILIDADE E ACEITAÇÃO ADIADA
# Sistema de Matchings Estáveis
# ========================================

import logging
from collections import deque
from typing import Dict, Iterable, Optional, Sequence

from src.models.models import (
    SIDE_I,
    SIDE_J,
    InstanceError,
    Matching,
    NotAMatchingError,
    PreferenceInstance,
    StabilityReport,
    UnstableMatchingError,
)

logger = logging.getLogger(__name__)


def partner_map(inst: PreferenceInstance, M: Iterable[str]) -> Dict[str, str]:
    """
    Mapeia cada vértice coberto por M para a sua aresta em M.
    Levanta NotAMatchingError se M usar aresta desconhecida ou repetir vértice.
    """
    parceiros: Dict[str, str] = {}
    for e in M:
        if e not in inst.edges:
            raise NotAMatchingError(f'aresta desconhecida no matching: {e}')
        for v in inst.endpoints(e):
            if v in parceiros:
                raise NotAMatchingError(f'vértice {v} coberto duas vezes ({parceiros[v]}, {e})')
            parceiros[v] = e
    return parceiros


def matched_edge(inst: PreferenceInstance, M: Iterable[str], v: str) -> Optional[str]:
    if not inst.has_vertex(v):
        raise InstanceError(f'vértice desconhecido: {v}')
    return partner_map(inst, M).get(v)


def _improves(inst, parceiros, v, e) -> bool:
    atual = parceiros.get(v)
    return atual is None or inst.prefers(v, e, atual)


def blocking_edges(inst: PreferenceInstance, M: Iterable[str]) -> StabilityReport:
    """
    Uma aresta e = mw fora de M bloqueia M se, em cada extremo, o vértice está
    descoberto ou prefere estritamente e à sua aresta em M.
    """
    M = frozenset(M)
    parceiros = partner_map(inst, M)
    bloqueadoras = []
    for e in inst.edge_ids:
        if e in M:
            continue
        m, w = inst.endpoints(e)
        if _improves(inst, parceiros, m, e) and _improves(inst, parceiros, w, e):
            bloqueadoras.append(e)
    return StabilityReport(stable=not bloqueadoras, blocking=tuple(bloqueadoras))


def is_stable(inst: PreferenceInstance, M: Iterable[str]) -> bool:
    return blocking_edges(inst, M).stable


def require_stable(inst: PreferenceInstance, M: Iterable[str], nome: str = 'M') -> Matching:
    M = frozenset(M)
    relatorio = blocking_edges(inst, M)
    if not relatorio.stable:
        raise UnstableMatchingError(
            f'{nome} não é estável (bloqueada por {", ".join(relatorio.blocking)})')
    return M


def deferred_acceptance(inst: PreferenceInstance, side: str = SIDE_I,
                        queue_order: Optional[Sequence[str]] = None) -> Matching:
    """
    Algoritmo de aceitação adiada (propostas e rejeições).
    Recebe: lado proponente ('I' dá Mmin, 'J' dá Mmax) e, opcionalmente, a ordem
    inicial da fila de proponentes (padrão: ordem canônica)
    Retorna: o matching estável ótimo para o lado proponente
    """
    if side not in (SIDE_I, SIDE_J):
        raise ValueError(f'lado inválido: {side!r}')
    proponentes = inst.side_i if side == SIDE_I else inst.side_j
    if queue_order is not None:
        if sorted(queue_order) != sorted(proponentes):
            raise ValueError('queue_order deve ser uma permutação do lado proponente')
        proponentes = tuple(queue_order)

    proxima = {p: 0 for p in proponentes}       # índice da próxima aresta a propor
    retida: Dict[str, str] = {}                 # receptor -> aresta aceita
    fila = deque(proponentes)

    while fila:
        p = fila.popleft()
        lista = inst.prefs[p]
        while proxima[p] < len(lista):
            e = lista[proxima[p]]
            proxima[p] += 1
            r = inst.other_end(e, p)
            atual = retida.get(r)
            if atual is None:
                retida[r] = e
                break
            if inst.prefers(r, e, atual):
                retida[r] = e
                fila.append(inst.other_end(atual, r))
                break
        # lista esgotada: o proponente fica descoberto para sempre

    resultado = frozenset(retida.values())
    logger.debug('aceitação adiada (lado %s): %d arestas', side, len(resultado))
    return resultado


def covered_set(inst: PreferenceInstance) -> frozenset:
    """Ṽ: vértices cobertos por todo matching estável (os cobertos por Mmin)."""
    cobertos = set()
    for e in deferred_acceptance(inst, SIDE_I):
        cobertos.update(inst.endpoints(e))
    return frozenset(cobertos)
