from pathlib import Path

from hypothesis import strategies as st

from src.core.instance import build_instance, parse_instance
from src.models.models import Rotation

PASTA_INSTANCIAS = Path(__file__).resolve().parent.parent / 'instances'

# Os três matchings estáveis de G-right, de Mmin a Mmax
M1 = frozenset({'b', 'd', "a'", "c'"})
M2 = frozenset({'b', 'd', "b'", "d'"})
M3 = frozenset({'a', 'c', "b'", "d'"})

ROT_C = Rotation(("a'", "c'"), ("b'", "d'"))
ROT_D = Rotation(('b', 'd'), ('c', 'a'))

K22_MIN = frozenset({'e11', 'e22'})
K22_MAX = frozenset({'e12', 'e21'})


def instance_path(nome: str) -> Path:
    return PASTA_INSTANCIAS / f'{nome}.sm'


def load_fixture(nome: str):
    return parse_instance(instance_path(nome).read_text(encoding='utf-8'))


def latin3():
    """Preferências cíclicas 3x3: três matchings estáveis numa cadeia de duas rotações."""
    side_i, side_j = ['m1', 'm2', 'm3'], ['w1', 'w2', 'w3']
    edges = {f'{m}{w}': (m, w) for m in side_i for w in side_j}
    prefs = {
        'm1': ['m1w1', 'm1w2', 'm1w3'],
        'm2': ['m2w2', 'm2w3', 'm2w1'],
        'm3': ['m3w3', 'm3w1', 'm3w2'],
        'w1': ['m2w1', 'm3w1', 'm1w1'],
        'w2': ['m3w2', 'm1w2', 'm2w2'],
        'w3': ['m1w3', 'm2w3', 'm3w3'],
    }
    return build_instance(side_i, side_j, edges, prefs)


@st.composite
def preference_instances(draw, max_side=5, max_edges=24):
    """Instâncias pequenas com graus e ordens aleatórios."""
    n_i = draw(st.integers(min_value=0, max_value=max_side))
    n_j = draw(st.integers(min_value=0, max_value=max_side))
    side_i = [f'm{k}' for k in range(1, n_i + 1)]
    side_j = [f'w{k}' for k in range(1, n_j + 1)]
    pares = [(m, w) for m in side_i for w in side_j]
    mascara = draw(st.lists(st.booleans(), min_size=len(pares), max_size=len(pares)))
    escolhidos = [par for par, usar in zip(pares, mascara) if usar][:max_edges]

    edges = {f'{m}{w}': (m, w) for m, w in escolhidos}
    prefs = {}
    for v in side_i + side_j:
        incidentes = sorted(e for e, par in edges.items() if v in par)
        prefs[v] = draw(st.permutations(incidentes))
    return build_instance(side_i, side_j, edges, prefs)
