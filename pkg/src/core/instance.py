# ========================================
# INSTÂNCIAS DE PREFERÊNCIAS
# Leitura, validação e acessores elementares δ(v) e γ(e)
# ========================================

import logging
import random
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.models.models import InstanceError, PreferenceInstance

logger = logging.getLogger(__name__)


def build_instance(side_i: Iterable[str], side_j: Iterable[str],
                   edges: Mapping[str, Tuple[str, str]],
                   prefs: Mapping[str, Sequence[str]]) -> PreferenceInstance:
    """
    Valida os dados e cria uma instância imutável.
    Recebe: lados I e J, arestas (id -> (vértice I, vértice J)) e listas de preferência
    Retorna: PreferenceInstance com ordem canônica nos lados
    """
    side_i = tuple(sorted(side_i))
    side_j = tuple(sorted(side_j))
    if len(set(side_i)) != len(side_i) or len(set(side_j)) != len(side_j):
        raise InstanceError('id de vértice duplicado')
    comuns = set(side_i) & set(side_j)
    if comuns:
        raise InstanceError(f'vértice nos dois lados: {min(comuns)}')

    conjunto_i, conjunto_j = set(side_i), set(side_j)
    incidentes: Dict[str, List[str]] = {v: [] for v in side_i + side_j}
    pares = set()
    for e, (m, w) in edges.items():
        if e in incidentes:
            raise InstanceError(f'id de aresta coincide com id de vértice: {e}')
        if m not in conjunto_i or w not in conjunto_j:
            raise InstanceError(f'aresta {e} deve ligar um vértice de I a um vértice de J')
        if (m, w) in pares:
            raise InstanceError(f'aresta paralela entre {m} e {w}: {e}')
        pares.add((m, w))
        incidentes[m].append(e)
        incidentes[w].append(e)

    ordens = {}
    for v, grau in incidentes.items():
        lista = tuple(prefs.get(v, ()))
        if sorted(lista) != sorted(grau):
            raise InstanceError(f'preferências de {v} não são uma permutação de δ({v})')
        ordens[v] = lista
    desconhecidos = set(prefs) - set(incidentes)
    if desconhecidos:
        raise InstanceError(f'preferências para vértice desconhecido: {min(desconhecidos)}')

    arestas = {e: tuple(par) for e, par in edges.items()}
    return PreferenceInstance(side_i, side_j, MappingProxyType(arestas), MappingProxyType(ordens))


# ========================================
# FORMATO DE ARQUIVO
# side I ... / side J ... / edge <id> <I> <J> / pref <v> <arestas...>
# ========================================
def parse_instance(text: str) -> PreferenceInstance:
    """Lê o formato de linhas acima (comentários com #); erros trazem o número da linha."""
    lados: Dict[str, List[str]] = {}
    arestas: Dict[str, Tuple[str, str]] = {}
    linhas_aresta: Dict[str, int] = {}
    prefs: Dict[str, List[str]] = {}
    linhas_pref: Dict[str, int] = {}

    for numero, bruta in enumerate(text.splitlines(), start=1):
        linha = bruta.split('#', 1)[0].strip()
        if not linha:
            continue
        tokens = linha.split()
        comando = tokens[0]

        if comando == 'side':
            if len(tokens) < 2 or tokens[1] not in ('I', 'J'):
                raise InstanceError('esperado "side I" ou "side J"', numero)
            if tokens[1] in lados:
                raise InstanceError(f'lado {tokens[1]} declarado duas vezes', numero)
            ids = tokens[2:]
            if len(set(ids)) != len(ids):
                raise InstanceError('id de vértice duplicado', numero)
            lados[tokens[1]] = ids
        elif comando == 'edge':
            if len(tokens) != 4:
                raise InstanceError('esperado "edge <id> <vértice I> <vértice J>"', numero)
            e = tokens[1]
            if e in arestas:
                raise InstanceError(f'id de aresta duplicado: {e}', numero)
            arestas[e] = (tokens[2], tokens[3])
            linhas_aresta[e] = numero
        elif comando == 'pref':
            if len(tokens) < 2:
                raise InstanceError('esperado "pref <vértice> <arestas...>"', numero)
            v = tokens[1]
            if v in prefs:
                raise InstanceError(f'preferências de {v} declaradas duas vezes', numero)
            prefs[v] = tokens[2:]
            linhas_pref[v] = numero
        else:
            raise InstanceError(f'comando desconhecido: {comando}', numero)

    for lado in ('I', 'J'):
        if lado not in lados:
            raise InstanceError(f'falta a linha "side {lado}"')

    conjunto_i, conjunto_j = set(lados['I']), set(lados['J'])
    normalizadas = {}
    for e, (u, v) in arestas.items():
        # aceita os extremos em qualquer ordem, desde que em lados opostos
        if u in conjunto_j and v in conjunto_i:
            u, v = v, u
        if u in conjunto_i and v in conjunto_i or u in conjunto_j and v in conjunto_j:
            raise InstanceError(f'extremos da aresta {e} no mesmo lado', linhas_aresta[e])
        if u not in conjunto_i or v not in conjunto_j:
            raise InstanceError(f'aresta {e} com vértice desconhecido', linhas_aresta[e])
        normalizadas[e] = (u, v)

    grau: Dict[str, List[str]] = {}
    for e, (m, w) in normalizadas.items():
        grau.setdefault(m, []).append(e)
        grau.setdefault(w, []).append(e)
    for v, lista in prefs.items():
        for e in lista:
            if e not in normalizadas:
                raise InstanceError(f'aresta desconhecida em pref {v}: {e}', linhas_pref[v])
        if sorted(lista) != sorted(grau.get(v, [])):
            raise InstanceError(
                f'preferências de {v} não são uma permutação de δ({v})', linhas_pref[v])

    return build_instance(lados['I'], lados['J'], normalizadas, prefs)


def serialize_instance(inst: PreferenceInstance) -> str:
    linhas = [
        'side I ' + ' '.join(inst.side_i),
        'side J ' + ' '.join(inst.side_j),
    ]
    for e in inst.edge_ids:
        m, w = inst.edges[e]
        linhas.append(f'edge {e} {m} {w}')
    for v in inst.vertices:
        if inst.prefs[v]:
            linhas.append(f'pref {v} ' + ' '.join(inst.prefs[v]))
    return '\n'.join(linhas) + '\n'


# ========================================
# ACESSORES ELEMENTARES
# ========================================
def _check_vertex(inst: PreferenceInstance, v: str):
    if not inst.has_vertex(v):
        raise InstanceError(f'vértice desconhecido: {v}')


def _check_edge(inst: PreferenceInstance, e: str):
    if e not in inst.edges:
        raise InstanceError(f'aresta desconhecida: {e}')


def incident_edges(inst: PreferenceInstance, v: str) -> List[str]:
    """δ(v) em ordem de preferência (melhor primeiro)."""
    _check_vertex(inst, v)
    return list(inst.prefs[v])


def rank(inst: PreferenceInstance, v: str, e: str) -> int:
    _check_vertex(inst, v)
    _check_edge(inst, e)
    if e not in inst.prefs[v]:
        raise InstanceError(f'aresta {e} não incide em {v}')
    return inst.rank(v, e)


def gamma_set(inst: PreferenceInstance, e: str) -> frozenset:
    """
    γ(e): arestas que compartilham um vértice com e e são fracamente preferidas
    a e nesse vértice (inclui a própria e).
    """
    _check_edge(inst, e)
    resultado = set()
    for v in inst.endpoints(e):
        limite = inst.rank(v, e)
        resultado.update(inst.prefs[v][:limite])
    return frozenset(resultado)


def remove_vertices(inst: PreferenceInstance, drop: Iterable[str]) -> PreferenceInstance:
    """Subinstância induzida em V − drop; a ordem relativa das arestas restantes é mantida."""
    drop = set(drop)
    for v in drop:
        _check_vertex(inst, v)
    arestas = {
        e: (m, w) for e, (m, w) in inst.edges.items()
        if m not in drop and w not in drop
    }
    prefs = {
        v: [e for e in lista if e in arestas]
        for v, lista in inst.prefs.items() if v not in drop
    }
    return build_instance(
        [v for v in inst.side_i if v not in drop],
        [v for v in inst.side_j if v not in drop],
        arestas, prefs,
    )


def disjoint_union(instances: Sequence[PreferenceInstance],
                   prefixes: Sequence[str] = ()) -> PreferenceInstance:
    """União disjunta; cada cópia recebe um prefixo nos ids (padrão: "1.", "2.", ...)."""
    if not prefixes:
        prefixes = [f'{k}.' for k in range(1, len(instances) + 1)]
    if len(prefixes) != len(instances) or len(set(prefixes)) != len(prefixes):
        raise InstanceError('é preciso um prefixo distinto por instância')

    side_i, side_j, arestas, prefs = [], [], {}, {}
    for p, inst in zip(prefixes, instances):
        side_i.extend(p + v for v in inst.side_i)
        side_j.extend(p + v for v in inst.side_j)
        for e, (m, w) in inst.edges.items():
            arestas[p + e] = (p + m, p + w)
        for v, lista in inst.prefs.items():
            prefs[p + v] = [p + e for e in lista]
    return build_instance(side_i, side_j, arestas, prefs)


def random_instance(n_i: int, n_j: int, density: float = 1.0, seed=None) -> PreferenceInstance:
    """
    Instância aleatória: cada par (m, w) vira aresta com probabilidade `density`,
    e cada vértice recebe uma ordem uniforme sobre δ(v).
    Ids: m1..m{n_i}, w1..w{n_j}, arestas m{i}w{j}.
    """
    if not 0 <= density <= 1:
        raise ValueError('density deve estar em [0, 1]')
    rng = random.Random(seed)
    side_i = [f'm{k}' for k in range(1, n_i + 1)]
    side_j = [f'w{k}' for k in range(1, n_j + 1)]
    arestas = {}
    for m in side_i:
        for w in side_j:
            if rng.random() < density:
                arestas[f'{m}{w}'] = (m, w)
    incidentes: Dict[str, List[str]] = {v: [] for v in side_i + side_j}
    for e, (m, w) in arestas.items():
        incidentes[m].append(e)
        incidentes[w].append(e)
    for lista in incidentes.values():
        rng.shuffle(lista)
    logger.debug('instância aleatória: %d arestas', len(arestas))
    return build_instance(side_i, side_j, arestas, incidentes)
