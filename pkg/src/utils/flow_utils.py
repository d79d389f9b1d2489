# ========================================
# FLUXO MÁXIMO / CORTE MÍNIMO (Dinic, aritmética exata)
# ========================================

import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List

from src.models.models import FlowNetwork, MatchingError, MinCut

logger = logging.getLogger(__name__)


class _Residual:
    """Rede residual em listas: o arco a e o seu reverso a ^ 1 ficam lado a lado."""

    def __init__(self, n: int):
        self.adj: List[List[int]] = [[] for _ in range(n)]
        self.to: List[int] = []
        self.cap: List[Fraction] = []

    def add_arc(self, u: int, v: int, capacidade: Fraction):
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacidade)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(Fraction(0))

    def levels(self, s: int) -> List[int]:
        nivel = [-1] * len(self.adj)
        nivel[s] = 0
        fila = deque([s])
        while fila:
            u = fila.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if nivel[v] < 0 and self.cap[a] > 0:
                    nivel[v] = nivel[u] + 1
                    fila.append(v)
        return nivel

    def blocking_flow(self, s: int, t: int, nivel: List[int]) -> Fraction:
        # DFS iterativa com ponteiros de arco corrente
        corrente = [0] * len(self.adj)
        total = Fraction(0)
        while True:
            caminho: List[int] = []
            u = s
            while u != t:
                avancou = False
                while corrente[u] < len(self.adj[u]):
                    a = self.adj[u][corrente[u]]
                    v = self.to[a]
                    if self.cap[a] > 0 and nivel[v] == nivel[u] + 1:
                        caminho.append(a)
                        u = v
                        avancou = True
                        break
                    corrente[u] += 1
                if avancou:
                    continue
                if u == s:
                    return total
                nivel[u] = -1                   # beco sem saída
                a = caminho.pop()
                u = self.to[a ^ 1]
                corrente[u] += 1
            gargalo = min(self.cap[a] for a in caminho)
            for a in caminho:
                self.cap[a] -= gargalo
                self.cap[a ^ 1] += gargalo
            total += gargalo

    def reachable_from(self, s: int) -> set:
        vistos = {s}
        fila = deque([s])
        while fila:
            u = fila.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if v not in vistos and self.cap[a] > 0:
                    vistos.add(v)
                    fila.append(v)
        return vistos

    def reaching(self, t: int) -> set:
        vistos = {t}
        fila = deque([t])
        while fila:
            v = fila.popleft()
            for b in self.adj[v]:
                u = self.to[b]
                # o arco b ^ 1 vai de u para v
                if u not in vistos and self.cap[b ^ 1] > 0:
                    vistos.add(u)
                    fila.append(u)
        return vistos


def max_flow_min_cut(net: FlowNetwork, maximal_source_side: bool = False) -> MinCut:
    """
    Calcula o fluxo máximo de net.source para net.sink e um corte mínimo.
    Recebe: rede com capacidades racionais (None = infinita)
    Retorna: MinCut(valor, lado da fonte); por padrão o menor lado da fonte,
    com maximal_source_side=True o maior.
    """
    indice: Dict[object, int] = {no: i for i, no in enumerate(net.nodes)}
    if net.source not in indice or net.sink not in indice or net.source == net.sink:
        raise MatchingError('fonte e sumidouro devem ser nós distintos da rede')

    finitas = Fraction(0)
    for _, _, capacidade in net.arcs:
        if capacidade is not None:
            if capacidade < 0:
                raise MatchingError('capacidade negativa')
            finitas += Fraction(capacidade)
    infinito = finitas + 1

    residual = _Residual(len(net.nodes))
    originais = []
    for u, v, capacidade in net.arcs:
        c = infinito if capacidade is None else Fraction(capacidade)
        residual.add_arc(indice[u], indice[v], c)
        originais.append((indice[u], indice[v], c, capacidade is None))

    s, t = indice[net.source], indice[net.sink]
    valor = Fraction(0)
    while True:
        nivel = residual.levels(s)
        if nivel[t] < 0:
            break
        valor += residual.blocking_flow(s, t, nivel)

    if maximal_source_side:
        lado = set(range(len(net.nodes))) - residual.reaching(t)
    else:
        lado = residual.reachable_from(s)
    if t in lado or s not in lado:
        raise MatchingError('corte inválido: fonte e sumidouro do mesmo lado')

    capacidade_corte = Fraction(0)
    for u, v, c, infinita in originais:
        if u in lado and v not in lado:
            if infinita:
                raise MatchingError('o corte mínimo usa um arco de capacidade infinita')
            capacidade_corte += c
    if capacidade_corte != valor:
        raise MatchingError('fluxo máximo difere da capacidade do corte')

    logger.debug('fluxo máximo %s em rede com %d nós', valor, len(net.nodes))
    return MinCut(valor, frozenset(net.nodes[i] for i in lado))
