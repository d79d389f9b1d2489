# ========================================
# ORÁCULO POR FORÇA BRUTA
# Referência exponencial para os testes: todos os matchings, filtrados por estabilidade
# ========================================

from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple

from src.core.rotations import rotations_between
from src.core.stability import deferred_acceptance, is_stable
from src.models.models import (
    SIDE_I,
    Matching,
    OracleLimitError,
    PreferenceInstance,
    Rotation,
)

MAX_ORACLE_EDGES = 24


def _guard(inst: PreferenceInstance):
    if len(inst.edges) > MAX_ORACLE_EDGES:
        raise OracleLimitError(
            f'instância grande demais para o oráculo: {len(inst.edges)} arestas '
            f'(máximo {MAX_ORACLE_EDGES})'
        )


def all_matchings(inst: PreferenceInstance) -> List[Matching]:
    """Todos os matchings (estáveis ou não), por backtracking sobre os vértices de I."""
    _guard(inst)
    resultado = []
    usados = set()
    escolhidas: List[str] = []

    def visitar(pos: int):
        if pos == len(inst.side_i):
            resultado.append(frozenset(escolhidas))
            return
        m = inst.side_i[pos]
        visitar(pos + 1)                        # m fica livre
        for e in inst.prefs[m]:
            w = inst.other_end(e, m)
            if w in usados:
                continue
            usados.add(w)
            escolhidas.append(e)
            visitar(pos + 1)
            escolhidas.pop()
            usados.discard(w)

    visitar(0)
    return resultado


def all_stable_matchings(inst: PreferenceInstance) -> List[Matching]:
    """Cada matching estável uma vez, em ordem das listas ordenadas de arestas."""
    estaveis = [M for M in all_matchings(inst) if is_stable(inst, M)]
    return sorted(estaveis, key=lambda M: tuple(sorted(M)))


def oracle_min_weight(inst: PreferenceInstance, c: Mapping[str, Fraction]) -> Tuple[Matching, Fraction]:
    melhor, custo_melhor = None, None
    for M in all_stable_matchings(inst):
        custo = sum((Fraction(c[e]) for e in M), Fraction(0))
        if custo_melhor is None or custo < custo_melhor:
            melhor, custo_melhor = M, custo
    return melhor, custo_melhor


def oracle_precedes(inst: PreferenceInstance, C: Rotation, D: Rotation,
                    matchings: Optional[Sequence[Matching]] = None) -> bool:
    """
    C ⋖ D sse todo matching estável cuja trassa a partir de Mmin elimina D também elimina C.
    `matchings` permite reaproveitar uma enumeração já feita pelo oráculo.
    """
    _guard(inst)
    if C == D:
        return False
    if matchings is None:
        matchings = all_stable_matchings(inst)
    mmin = deferred_acceptance(inst, SIDE_I)
    for M in matchings:
        eliminadas = set(rotations_between(inst, mmin, M))
        if D in eliminadas and C not in eliminadas:
            return False
    return True
