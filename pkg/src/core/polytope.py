# ========================================
# POLITOPO DOS MATCHINGS ESTÁVEIS E MEDIANAS
# ========================================

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.core.instance import gamma_set
from src.core.stability import partner_map, require_stable
from src.models.models import (
    FractionalVector,
    InequalityCheck,
    Matching,
    MatchingError,
    Number,
    PolytopeReport,
    PreferenceInstance,
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


# ========================================
# VETORES
# ========================================
def characteristic_vector(M: Iterable[str],
                          inst: Optional[PreferenceInstance] = None) -> Dict[str, Fraction]:
    """χ^M; com a instância, as demais arestas aparecem com valor 0."""
    x = {e: Fraction(0) for e in inst.edge_ids} if inst is not None else {}
    for e in M:
        x[e] = Fraction(1)
    return x


def convex_combination(terms: Sequence[Tuple[Number, Iterable[str]]],
                       inst: Optional[PreferenceInstance] = None) -> Dict[str, Number]:
    """Σ α_i χ^{M_i} com α_i ≥ 0 e Σ α_i = 1."""
    if not terms:
        raise MatchingError('combinação convexa vazia')
    total = 0
    x: Dict[str, Number] = {e: Fraction(0) for e in inst.edge_ids} if inst is not None else {}
    for alfa, M in terms:
        if alfa < 0:
            raise MatchingError('coeficiente negativo na combinação convexa')
        total += alfa
        for e in M:
            x[e] = x.get(e, 0) + alfa
    if isinstance(total, float):
        if abs(total - 1) > DEFAULT_TOLERANCE:
            raise MatchingError('os coeficientes não somam 1')
    elif total != 1:
        raise MatchingError('os coeficientes não somam 1')
    return x


def _tolerancia(x: FractionalVector, tolerance: float) -> Number:
    # exato quando todas as entradas são racionais
    if all(isinstance(v, (int, Fraction)) for v in x.values()):
        return 0
    return tolerance


def _valores(inst: PreferenceInstance, x: FractionalVector) -> Dict[str, Number]:
    desconhecidas = sorted(set(x) - set(inst.edges))
    if desconhecidas:
        raise MatchingError(f'aresta desconhecida no vetor: {desconhecidas[0]}')
    return {e: x.get(e, 0) for e in inst.edge_ids}


def _soma(valores: Mapping[str, Number], arestas: Iterable[str]) -> Number:
    return sum((valores[e] for e in arestas), 0)


def _check(family: str, violacoes: Dict[str, Number]) -> InequalityCheck:
    if not violacoes:
        return InequalityCheck(family, True, 0, ())
    return InequalityCheck(
        family=family,
        passed=False,
        worst_violation=max(violacoes.values()),
        failures=tuple(sorted(violacoes)),
    )


# ========================================
# DESIGUALDADES DO POLITOPO
# ========================================
def check_polytope_membership(inst: PreferenceInstance, x: FractionalVector,
                              tolerance: float = DEFAULT_TOLERANCE) -> PolytopeReport:
    """
    Verifica o sistema que descreve o politopo:
      nonnegativity: x(e) ≥ 0
      degree:        x(δ(v)) ≤ 1
      gamma:         x(γ(e)) ≥ 1
    Recebe: instância, vetor (arestas ausentes valem 0), tolerância para entradas float
    Retorna: PolytopeReport com a maior violação de cada família
    """
    valores = _valores(inst, x)
    tol = _tolerancia(x, tolerance)

    negativas = {e: -v for e, v in valores.items() if v < -tol}
    grau = {}
    for v in inst.vertices:
        s = _soma(valores, inst.prefs[v])
        if s > 1 + tol:
            grau[v] = s - 1
    gama = {}
    for e in inst.edge_ids:
        s = _soma(valores, gamma_set(inst, e))
        if s < 1 - tol:
            gama[e] = 1 - s

    relatorio = PolytopeReport((
        _check('nonnegativity', negativas),
        _check('degree', grau),
        _check('gamma', gama),
    ))
    logger.debug('pertinência ao politopo: %s', relatorio.passed)
    return relatorio


def check_support_equalities(inst: PreferenceInstance, x: FractionalVector,
                             tolerance: float = DEFAULT_TOLERANCE) -> PolytopeReport:
    """Para toda aresta e = mw com x(e) > 0: x(δ(m)) = x(δ(w)) = x(γ(e)) = 1."""
    valores = _valores(inst, x)
    tol = _tolerancia(x, tolerance)

    falhas_i, falhas_j, falhas_gama = {}, {}, {}
    for e, valor in valores.items():
        if valor <= tol:
            continue
        m, w = inst.endpoints(e)
        for alvo, arestas in ((falhas_i, inst.prefs[m]),
                              (falhas_j, inst.prefs[w]),
                              (falhas_gama, gamma_set(inst, e))):
            desvio = abs(_soma(valores, arestas) - 1)
            if desvio > tol:
                alvo[e] = desvio

    return PolytopeReport((
        _check('support_degree_i', falhas_i),
        _check('support_degree_j', falhas_j),
        _check('support_gamma', falhas_gama),
    ))


def support_extremes(inst: PreferenceInstance, x: FractionalVector) -> Tuple[Matching, Matching]:
    """
    Sobre o suporte de x: M pega a melhor aresta de cada vértice de I e L a melhor
    de cada vértice de J. Para x no politopo, ambos são matchings estáveis
    (M é também a escolha pior em J, e L a pior em I).
    """
    valores = _valores(inst, x)
    suporte = {e for e, v in valores.items() if v > 0}

    def melhores(lado):
        escolhidas = set()
        for v in lado:
            for e in inst.prefs[v]:
                if e in suporte:
                    escolhidas.add(e)
                    break
        return frozenset(escolhidas)

    return melhores(inst.side_i), melhores(inst.side_j)


# ========================================
# MEDIANAS GENERALIZADAS
# ========================================
def generalized_median(inst: PreferenceInstance, matchings: Sequence[Iterable[str]], k: int) -> Matching:
    """
    A(k): em cada vértice coberto m ∈ I, a k-ésima aresta da lista (com repetições)
    E_m = [M_1(m), ..., M_ℓ(m)] ordenada por <_m. Confere que coincide com a
    construção pelo lado J, B(ℓ−k+1).
    """
    if not matchings:
        raise MatchingError('lista de matchings vazia')
    familia = [require_stable(inst, M, f'M{i}') for i, M in enumerate(matchings, start=1)]
    ell = len(familia)
    if not 1 <= k <= ell:
        raise MatchingError(f'k fora do intervalo 1..{ell}: {k}')

    parceiros = [partner_map(inst, M) for M in familia]

    def escolha(lado, posicao: int) -> Matching:
        resultado = set()
        for v in lado:
            lista: List[str] = [p[v] for p in parceiros if v in p]
            if not lista:
                continue
            lista.sort(key=lambda e: inst.rank(v, e))
            resultado.add(lista[posicao - 1])
        return frozenset(resultado)

    A = escolha(inst.side_i, k)
    B = escolha(inst.side_j, ell - k + 1)
    if A != B:
        raise MatchingError('as construções pelos lados I e J divergem')
    return A


def median(inst: PreferenceInstance, matchings: Sequence[Iterable[str]]) -> Matching:
    ell = len(matchings)
    if ell % 2 == 0:
        raise MatchingError(f'a mediana exige uma quantidade ímpar de matchings (recebeu {ell})')
    return generalized_median(inst, matchings, (ell + 1) // 2)
