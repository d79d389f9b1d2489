# ========================================
# ARQUIVO PRINCIPAL DO SISTEMA
# Sistema de Matchings Estáveis - linha de comando
# ========================================

import json
import logging
import os
import sys

# Configuração necessária para importar os módulos
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import click

from src.config import get_config
from src.core.instance import parse_instance
from src.core.lattice import join, meet
from src.core.polytope import check_polytope_membership, check_support_equalities, generalized_median, median
from src.core.poset import build_digraph, count_stable_matchings, enumerate_stable_matchings, to_dot
from src.core.stability import deferred_acceptance
from src.core.weights import (
    egalitarian_weights,
    load_weights,
    max_weight_stable_matching,
    min_weight_stable_matching,
)
from src.models.models import CapExceededError, FormatError, MatchingError
from src.utils.format_utils import format_matching, format_number, parse_matching_list, parse_vector_file
from src.utils.log_utils import configure_logging

logger = logging.getLogger(__name__)

# Códigos de saída
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3
EXIT_INTERRUPTED = 130


# ========================================
# FUNÇÕES AUXILIARES
# ========================================
def _ler(caminho: str) -> str:
    try:
        with open(caminho, encoding='utf-8') as arquivo:
            return arquivo.read()
    except UnicodeDecodeError as erro:
        raise FormatError(f'{caminho}: arquivo não está em UTF-8 (byte {erro.start})') from erro


def _instancia(caminho: str):
    inst = parse_instance(_ler(caminho))
    logger.info('instância %s: %d vértices, %d arestas', caminho, len(inst.vertices), len(inst.edges))
    return inst


def _um_matching(caminho: str) -> frozenset:
    matchings = parse_matching_list(_ler(caminho))
    if len(matchings) != 1:
        raise FormatError(f'{caminho}: esperado exatamente um matching, encontrados {len(matchings)}')
    return matchings[0]


def _interrompido(contagem: int):
    click.echo(f'interrompido: {contagem} matchings estáveis contados até aqui', err=True)
    raise click.exceptions.Exit(EXIT_INTERRUPTED)


class _Progresso:
    """Guarda a última contagem informada pela enumeração."""

    def __init__(self):
        self.total = 0

    def __call__(self, total: int):
        self.total = total


# ========================================
# GRUPO DE COMANDOS
# ========================================
@click.group()
@click.option('--log-level', default=None, help='DEBUG, INFO, WARNING ou ERROR')
@click.pass_context
def cli(ctx, log_level):
    """Ferramentas para matchings estáveis em grafos bipartidos."""
    config = get_config()
    configure_logging(log_level or config['log_level'])
    ctx.obj = config


@cli.command()
@click.argument('arquivo')
def validate(arquivo):
    """Valida a instância e imprime um resumo."""
    inst = _instancia(arquivo)
    click.echo(f'vertices {len(inst.vertices)} edges {len(inst.edges)}')


@cli.command()
@click.argument('arquivo')
@click.option('--side', type=click.Choice(['I', 'J']), default='I', show_default=True)
def solve(arquivo, side):
    """Aceitação adiada com o lado SIDE propondo."""
    inst = _instancia(arquivo)
    click.echo(format_matching(deferred_acceptance(inst, side)))


@cli.command(name='enumerate')
@click.argument('arquivo')
@click.option('--max', 'limite', type=click.IntRange(min=1), default=None)
@click.pass_obj
def enumerate_command(config, arquivo, limite):
    """Todos os matchings estáveis, um por linha."""
    inst = _instancia(arquivo)
    progresso = _Progresso()
    try:
        matchings = enumerate_stable_matchings(
            inst, limite or config['max_enumeration'], build_digraph(inst), progresso)
    except KeyboardInterrupt:
        _interrompido(progresso.total)
    for M in matchings:
        click.echo(format_matching(M))


@cli.command()
@click.argument('arquivo')
@click.option('--max', 'limite', type=click.IntRange(min=1), default=None)
@click.pass_obj
def count(config, arquivo, limite):
    """Quantidade de matchings estáveis."""
    inst = _instancia(arquivo)
    progresso = _Progresso()
    try:
        total = count_stable_matchings(
            inst, limite or config['max_enumeration'], build_digraph(inst), progresso)
    except KeyboardInterrupt:
        _interrompido(progresso.total)
    click.echo(str(total))


@cli.command()
@click.argument('arquivo')
def rotations(arquivo):
    """Rotações de R_G em ordem canônica."""
    inst = _instancia(arquivo)
    for k, r in enumerate(build_digraph(inst).rotations):
        click.echo(f'R{k}: {" ".join(r.matching_edges)} | {" ".join(r.active_edges)}')


@cli.command()
@click.argument('arquivo')
@click.option('--dot', is_flag=True, help='Saída no formato DOT')
def poset(arquivo, dot):
    """Arcos do dígrafo gerador do poset de rotações."""
    inst = _instancia(arquivo)
    digrafo = build_digraph(inst)
    if dot:
        click.echo(to_dot(digrafo), nl=False)
        return
    for (c, d) in sorted(digrafo.arcs):
        click.echo(f'R{c} -> R{d} {digrafo.arcs[(c, d)]}')


@cli.command()
@click.argument('arquivo')
@click.option('--egalitarian', is_flag=True, help='c(e) = posição em I + posição em J')
@click.option('--weights', 'arquivo_pesos', default=None, help='Arquivo "w <aresta> <decimal>"')
@click.option('--maximize', is_flag=True, help='Maximiza em vez de minimizar')
def minweight(arquivo, egalitarian, arquivo_pesos, maximize):
    """Matching estável de peso mínimo (ou máximo)."""
    if egalitarian == (arquivo_pesos is not None):
        raise click.UsageError('informe exatamente uma opção: --egalitarian ou --weights')
    inst = _instancia(arquivo)
    pesos = egalitarian_weights(inst) if egalitarian else load_weights(_ler(arquivo_pesos), inst)
    resolver = max_weight_stable_matching if maximize else min_weight_stable_matching
    M, custo = resolver(inst, pesos)
    click.echo(format_matching(M))
    click.echo(f'cost {format_number(custo)}')


@cli.command(name='median')
@click.argument('arquivo')
@click.option('--matchings', 'arquivo_matchings', required=True)
@click.option('--k', 'k', type=int, default=None, help='Mediana generalizada A(k)')
def median_command(arquivo, arquivo_matchings, k):
    """Mediana (ou mediana generalizada) de uma lista de matchings estáveis."""
    inst = _instancia(arquivo)
    familia = parse_matching_list(_ler(arquivo_matchings))
    resultado = median(inst, familia) if k is None else generalized_median(inst, familia, k)
    click.echo(format_matching(resultado))


def _lattice_command(nome, operacao, descricao):
    @cli.command(name=nome, help=descricao)
    @click.argument('arquivo')
    @click.option('--a', 'arquivo_a', required=True)
    @click.option('--b', 'arquivo_b', required=True)
    def comando(arquivo, arquivo_a, arquivo_b):
        inst = _instancia(arquivo)
        click.echo(format_matching(operacao(inst, _um_matching(arquivo_a), _um_matching(arquivo_b))))
    return comando


meet_command = _lattice_command('meet', meet, 'Ínfimo M ∧ L.')
join_command = _lattice_command('join', join, 'Supremo M ∨ L.')


@cli.command()
@click.argument('arquivo')
@click.option('--x', 'arquivo_x', required=True, help='Arquivo "x <aresta> <decimal>"')
@click.option('--support', is_flag=True, help='Verifica também as igualdades no suporte')
@click.option('--json', 'como_json', is_flag=True, help='Relatório em JSON')
@click.pass_obj
def verify(config, arquivo, arquivo_x, support, como_json):
    """Verifica se o vetor x pertence ao politopo dos matchings estáveis."""
    inst = _instancia(arquivo)
    x = parse_vector_file(_ler(arquivo_x))
    relatorio = check_polytope_membership(inst, x, config['tolerance'])
    igualdades = check_support_equalities(inst, x, config['tolerance']) if support else None

    if como_json:
        dados = {'membership': relatorio.para_dict()}
        if igualdades is not None:
            dados['support'] = igualdades.para_dict()
        click.echo(json.dumps(dados, indent=2, ensure_ascii=False))
        return

    checks = relatorio.checks + (igualdades.checks if igualdades is not None else ())
    for check in checks:
        if check.passed:
            click.echo(f'{check.family} ok')
        else:
            click.echo(f'{check.family} FAIL {format_number(check.worst_violation)} '
                       f'{" ".join(check.failures)}')
    click.echo('in polytope' if relatorio.passed else 'not in polytope')


# ========================================
# PONTO DE ENTRADA
# ========================================
def run(argv=None) -> int:
    """
    Executa a CLI sem encerrar o processo.
    Retorna: código de saída (0 ok, 1 entrada inválida, 2 limite excedido, 3 E/S, 130 interrompido)
    """
    try:
        resultado = cli.main(args=argv, prog_name='matching', standalone_mode=False)
    except CapExceededError as erro:
        click.echo(f'Erro: {erro} (contados {erro.count})', err=True)
        return EXIT_INFEASIBLE
    except MatchingError as erro:
        click.echo(f'Erro: {erro}', err=True)
        return EXIT_INVALID
    except OSError as erro:
        click.echo(f'Erro: falha de E/S: {erro}', err=True)
        return EXIT_IO
    except click.exceptions.Abort:
        click.echo('interrompido', err=True)
        return EXIT_INTERRUPTED
    except click.ClickException as erro:
        click.echo(f'Erro: {erro.format_message()}', err=True)
        return EXIT_INVALID
    return resultado if isinstance(resultado, int) else EXIT_OK


if __name__ == '__main__':
    sys.exit(run())
