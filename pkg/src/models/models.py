# ========================================
# MODELOS DO DOMÍNIO
# Sistema de Matchings Estáveis
# ========================================

# Importações necessárias
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Mapping, NamedTuple, Optional, Tuple, Union

import networkx as nx

# Lados da bipartição
SIDE_I = 'I'
SIDE_J = 'J'

# Um matching é um conjunto imutável de ids de arestas
Matching = FrozenSet[str]

# Um ideal do poset de rotações é um conjunto de índices de rotações
Ideal = FrozenSet[int]

# Pesos exatos por aresta e vetores fracionários
Number = Union[int, Fraction, float]
WeightFunction = Mapping[str, Fraction]
FractionalVector = Mapping[str, Number]

# Tags de origem dos arcos do dígrafo de rotações
ARC_SHARED_VERTEX = 'shared-vertex'
ARC_SUCCESSOR_RULE = 'successor-rule'


# ========================================
# ERROS DO SISTEMA
# Todas as funções da biblioteca levantam subclasses de MatchingError;
# a CLI traduz cada uma para o seu código de saída.
# ========================================
class MatchingError(Exception):
    """Erro base do sistema de matchings estáveis."""


class InstanceError(MatchingError):
    """Instância inválida (sintaxe ou validação), com número de linha opcional."""

    def __init__(self, mensagem: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            mensagem = f'linha {line}: {mensagem}'
        super().__init__(mensagem)


class FormatError(MatchingError):
    """Arquivo auxiliar (pesos, vetor, lista de matchings) mal formado."""


class NotAMatchingError(MatchingError):
    pass


class UnstableMatchingError(MatchingError):
    pass


class RotationError(MatchingError):
    """A rotação não está exposta no matching informado."""


class OrderError(MatchingError):
    """Os matchings não estão na relação de ordem exigida."""


class NotAnIdealError(MatchingError):
    pass


class CapExceededError(MatchingError):
    """Enumeração interrompida ao ultrapassar o limite configurado."""

    def __init__(self, cap: int, count: int):
        self.cap = cap
        self.count = count
        super().__init__(f'limite de {cap} matchings estáveis excedido')


class OracleLimitError(MatchingError):
    pass


# ========================================
# MODELO: INSTÂNCIA DE PREFERÊNCIAS
# Grafo bipartido com ordens estritas por vértice
# ========================================
@dataclass(frozen=True, eq=True)
class PreferenceInstance:
    side_i: Tuple[str, ...]                     # Vértices do lado I (ordem canônica)
    side_j: Tuple[str, ...]                     # Vértices do lado J
    edges: Mapping[str, Tuple[str, str]]        # id da aresta -> (vértice em I, vértice em J), somente leitura
    prefs: Mapping[str, Tuple[str, ...]]        # vértice -> arestas, melhor primeiro, somente leitura

    __hash__ = None

    @cached_property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(sorted(self.side_i + self.side_j))

    @cached_property
    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _i_set(self) -> FrozenSet[str]:
        return frozenset(self.side_i)

    @cached_property
    def _ranks(self) -> Dict[str, Dict[str, int]]:
        # posição (começando em 1) de cada aresta na ordem de cada vértice
        return {
            v: {e: pos for pos, e in enumerate(lista, start=1)}
            for v, lista in self.prefs.items()
        }

    @cached_property
    def _pair_index(self) -> Dict[Tuple[str, str], str]:
        return {par: e for e, par in self.edges.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self.prefs

    def is_i(self, v: str) -> bool:
        return v in self._i_set

    def endpoints(self, e: str) -> Tuple[str, str]:
        return self.edges[e]

    def other_end(self, e: str, v: str) -> str:
        m, w = self.edges[e]
        return w if v == m else m

    def rank(self, v: str, e: str) -> int:
        return self._ranks[v][e]

    def prefers(self, v: str, e: str, f: str) -> bool:
        """True se v prefere estritamente e a f."""
        ranks = self._ranks[v]
        return ranks[e] < ranks[f]

    def edge_between(self, m: str, w: str) -> Optional[str]:
        return self._pair_index.get((m, w))

    def para_dict(self):
        return {
            'side_i': list(self.side_i),
            'side_j': list(self.side_j),
            'edges': {e: list(par) for e, par in sorted(self.edges.items())},
            'prefs': {v: list(lista) for v, lista in sorted(self.prefs.items()) if lista},
        }


# ========================================
# MODELO: RELATÓRIO DE ESTABILIDADE
# ========================================
@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    blocking: Tuple[str, ...]                   # Arestas bloqueadoras em ordem canônica

    def para_dict(self):
        return {'stable': self.stable, 'blocking': list(self.blocking)}


# ========================================
# MODELO: CICLO ALTERNANTE DE M△L
# ========================================
@dataclass(frozen=True)
class AlternatingCycle:
    edges: Tuple[str, ...]                      # ordem cíclica: aresta de M, aresta de L, ...
    vertices: FrozenSet[str]
    raising: bool                               # True se sobe em relação ao primeiro matching

    @property
    def classification(self) -> str:
        return 'raising' if self.raising else 'lowering'

    @property
    def first_edges(self) -> Tuple[str, ...]:
        return self.edges[0::2]

    @property
    def second_edges(self) -> Tuple[str, ...]:
        return self.edges[1::2]


# ========================================
# MODELO: ROTAÇÃO
# Forma canônica: começa pela menor aresta de matching, arestas ativas à frente
# ========================================
@dataclass(frozen=True, order=True)
class Rotation:
    matching_edges: Tuple[str, ...]             # e_1 .. e_k
    active_edges: Tuple[str, ...]               # a_1 .. a_k (a_i compartilha o vértice I de e_i)

    @classmethod
    def canonical(cls, matching_edges, active_edges) -> 'Rotation':
        matching_edges = tuple(matching_edges)
        active_edges = tuple(active_edges)
        inicio = matching_edges.index(min(matching_edges))
        return cls(
            matching_edges[inicio:] + matching_edges[:inicio],
            active_edges[inicio:] + active_edges[:inicio],
        )

    @property
    def sequence(self) -> Tuple[str, ...]:
        """e_1 a_1 e_2 a_2 ... e_k a_k"""
        saida = []
        for e, a in zip(self.matching_edges, self.active_edges):
            saida.extend((e, a))
        return tuple(saida)

    def __len__(self):
        return len(self.matching_edges)

    def __str__(self):
        return ' '.join(self.sequence)

    def para_dict(self):
        return {
            'matching_edges': list(self.matching_edges),
            'active_edges': list(self.active_edges),
        }


# ========================================
# MODELO: GRAFO ATIVO Γ(M)
# ========================================
@dataclass(frozen=True)
class ActiveComponent:
    vertices: FrozenSet[str]
    edges: FrozenSet[str]
    cycle: Optional[Rotation] = None            # único ciclo, se existir

    @property
    def is_tree(self) -> bool:
        return self.cycle is None


@dataclass(frozen=True)
class ActiveGraph:
    matching: Matching
    admissible: FrozenSet[str]
    active: Dict[str, str]                      # vértice de I -> aresta ativa
    components: Tuple[ActiveComponent, ...]

    @property
    def active_edges(self) -> FrozenSet[str]:
        return frozenset(self.active.values())

    @property
    def is_forest(self) -> bool:
        return all(c.is_tree for c in self.components)


# ========================================
# MODELO: TRASSA (cadeia maximal de eliminações)
# ========================================
@dataclass(frozen=True)
class Trace:
    matchings: Tuple[Matching, ...]             # M_0 = Mmin, ..., M_N = Mmax
    rotations: Tuple[Rotation, ...]             # C_1 .. C_N

    @property
    def length(self) -> int:
        return len(self.rotations)


# ========================================
# MODELO: DÍGRAFO GERADOR H DAS ROTAÇÕES
# ========================================
@dataclass(frozen=True)
class RotationDigraph:
    rotations: Tuple[Rotation, ...]             # nós em ordem canônica (índice = posição)
    arcs: Dict[Tuple[int, int], str] = field(default_factory=dict)  # (C, D) -> tag de origem

    __hash__ = None

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.rotations)))
        for (c, d), tag in self.arcs.items():
            g.add_edge(c, d, tag=tag)
        return g

    @cached_property
    def _index(self) -> Dict[Rotation, int]:
        return {r: i for i, r in enumerate(self.rotations)}

    def index_of(self, rotation: Rotation) -> int:
        try:
            return self._index[rotation]
        except KeyError:
            raise RotationError(f'rotação desconhecida: {rotation}') from None

    def predecessors(self, k: int) -> Tuple[int, ...]:
        return tuple(sorted(self.graph.predecessors(k)))

    def __len__(self):
        return len(self.rotations)


# ========================================
# MODELOS: FECHO MÍNIMO E REDE DE FLUXO
# ========================================
@dataclass(frozen=True)
class ClosureInstance:
    nodes: Tuple[object, ...]
    arcs: Tuple[Tuple[object, object], ...]
    weights: Dict[object, Fraction]             # ζ por nó

    __hash__ = None


@dataclass(frozen=True)
class FlowNetwork:
    nodes: Tuple[object, ...]                   # inclui fonte e sumidouro
    arcs: Tuple[Tuple[object, object, Optional[Fraction]], ...]  # capacidade None = infinita
    source: object
    sink: object

    __hash__ = None


class MinCut(NamedTuple):
    value: Fraction
    source_side: FrozenSet[object]


# ========================================
# MODELOS: RELATÓRIOS DO POLITOPO
# ========================================
@dataclass(frozen=True)
class InequalityCheck:
    family: str                                 # 'nonnegativity', 'degree', 'gamma', ...
    passed: bool
    worst_violation: Number                     # 0 quando passa
    failures: Tuple[str, ...]                   # ids (aresta ou vértice) violados

    def para_dict(self):
        return {
            'family': self.family,
            'passed': self.passed,
            'worst_violation': str(self.worst_violation),
            'failures': list(self.failures),
        }


@dataclass(frozen=True)
class PolytopeReport:
    checks: Tuple[InequalityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, family: str) -> InequalityCheck:
        for c in self.checks:
            if c.family == family:
                return c
        raise KeyError(family)

    def para_dict(self):
        return {
            'passed': self.passed,
            'checks': [c.para_dict() for c in self.checks],
        }
