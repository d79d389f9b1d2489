import pytest

from src.core.instance import (
    build_instance,
    disjoint_union,
    gamma_set,
    incident_edges,
    parse_instance,
    random_instance,
    rank,
    remove_vertices,
    serialize_instance,
)
from src.models.models import InstanceError


def test_parse_g_right(g_right):
    assert g_right.side_i == ('1', '2', '3', '4')
    assert g_right.side_j == ('v', 'w', 'x', 'y')
    assert len(g_right.edges) == 9
    assert g_right.endpoints("a'") == ('3', 'v')
    assert g_right.prefs['2'] == ('d', 'e', 'a')


def test_instance_mappings_are_read_only(g_right):
    with pytest.raises(TypeError):
        g_right.edges['z'] = ('1', 'x')
    with pytest.raises(TypeError):
        g_right.prefs['1'] = ()
    assert len(g_right.edges) == 9


def test_build_instance_copies_its_input():
    arestas = {'e': ['m', 'w']}
    prefs = {'m': ['e'], 'w': ['e']}
    inst = build_instance(['m'], ['w'], arestas, prefs)
    arestas['f'] = ('m', 'w')
    prefs['m'].append('f')
    assert inst.edge_ids == ('e',)
    assert inst.endpoints('e') == ('m', 'w')
    assert inst.prefs['m'] == ('e',)


def test_rank_and_incident_edges(g_right):
    assert rank(g_right, '2', 'a') == 3
    assert rank(g_right, 'v', "d'") == 1
    assert incident_edges(g_right, 'v') == ["d'", 'e', "a'"]
    with pytest.raises(InstanceError):
        rank(g_right, '1', 'a')
    with pytest.raises(InstanceError):
        incident_edges(g_right, 'z')


def test_gamma_set(g_right):
    assert gamma_set(g_right, 'e') == {'d', 'e', "d'"}
    # b é a primeira em 1, segunda em y
    assert gamma_set(g_right, 'b') == {'a', 'b'}


def test_edge_endpoints_in_any_order():
    inst = parse_instance('side I m\nside J w\nedge e w m\npref m e\npref w e\n')
    assert inst.endpoints('e') == ('m', 'w')


def test_comments_and_blank_lines_are_ignored(k22):
    texto = '# cabeçalho\n\n' + serialize_instance(k22) + '\n# fim\n'
    assert parse_instance(texto) == k22


def test_serialize_round_trip(g_right, g_left):
    for inst in (g_right, g_left):
        assert parse_instance(serialize_instance(inst)) == inst


@pytest.mark.parametrize('texto, linha', [
    ('side I 1\nside J x\nedge a 1 x\npref 1 a\npref x b\n', 5),
    ('side I 1\nside J x\nedge a 1 x\nedge a 1 x\n', 4),
    ('side I 1\nside J x\nfoo bar\n', 3),
    ('side I 1 2\nside J x\nedge a 1 2\n', 3),
    ('side I 1\nside J x\nedge a 1 x\npref 1 a a\npref x a\n', 4),
    ('side K 1\n', 1),
])
def test_parse_errors_carry_line_number(texto, linha):
    with pytest.raises(InstanceError) as erro:
        parse_instance(texto)
    assert erro.value.line == linha
    assert str(erro.value).startswith(f'linha {linha}:')


def test_missing_side_is_rejected():
    with pytest.raises(InstanceError):
        parse_instance('side I 1\n')


def test_build_instance_validation():
    with pytest.raises(InstanceError):
        build_instance(['m'], ['m'], {}, {})
    with pytest.raises(InstanceError):
        build_instance(['m'], ['w'], {'e': ('m', 'w'), 'f': ('m', 'w')},
                       {'m': ['e', 'f'], 'w': ['e', 'f']})
    with pytest.raises(InstanceError):
        build_instance(['m'], ['w'], {'m': ('m', 'w')}, {'m': ['m'], 'w': ['m']})
    with pytest.raises(InstanceError):
        build_instance(['m'], ['w'], {'e': ('m', 'w')}, {'m': ['e']})
    with pytest.raises(InstanceError):
        build_instance(['m'], ['w'], {}, {'z': []})


def test_empty_instance():
    inst = build_instance([], [], {}, {})
    assert inst.vertices == ()
    assert inst.edge_ids == ()


def test_remove_vertices(g_left):
    menor = remove_vertices(g_left, ['v'])
    assert 'e' not in menor.edges
    assert menor.prefs['2'] == ('d', 'a')
    with pytest.raises(InstanceError):
        remove_vertices(g_left, ['z'])


def test_disjoint_union(k22):
    uniao = disjoint_union([k22, k22])
    assert len(uniao.vertices) == 8
    assert uniao.endpoints('2.e12') == ('2.m1', '2.w2')
    assert uniao.prefs['1.w1'] == ('1.e21', '1.e11')

    nomeada = disjoint_union([k22, k22], ['a:', 'b:'])
    assert 'b:e22' in nomeada.edges
    with pytest.raises(InstanceError):
        disjoint_union([k22, k22], ['x', 'x'])


def test_random_instance_is_reproducible():
    a = random_instance(4, 3, density=1.0, seed=11)
    b = random_instance(4, 3, density=1.0, seed=11)
    assert a == b
    assert len(a.edges) == 12
    assert len(random_instance(4, 3, density=0.0, seed=1).edges) == 0
