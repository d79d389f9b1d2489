#!/usr/bin/env python3
"""Gera uma instância aleatória no formato de arquivo do sistema.
Útil para o teste de desempenho e para experimentos manuais.
Exemplo: python tools/generate_random_instance.py 200 200 --density 1 --seed 7 -o tmp/denso.sm
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import click

from src.core.instance import random_instance, serialize_instance


@click.command()
@click.argument('n_i', type=click.IntRange(min=0))
@click.argument('n_j', type=click.IntRange(min=0))
@click.option('--density', type=click.FloatRange(0, 1), default=1.0, show_default=True)
@click.option('--seed', type=int, default=None)
@click.option('-o', '--output', 'saida', default=None, help='Arquivo de saída (padrão: stdout)')
def main(n_i, n_j, density, seed, saida):
    inst = random_instance(n_i, n_j, density, seed)
    texto = serialize_instance(inst)
    if saida is None:
        click.echo(texto, nl=False)
        return
    pasta = os.path.dirname(saida)
    if pasta:
        os.makedirs(pasta, exist_ok=True)
    with open(saida, 'w', encoding='utf-8') as arquivo:
        arquivo.write(texto)
    click.echo(f'Instância salva em: {saida} ({len(inst.edges)} arestas)', err=True)


if __name__ == '__main__':
    main()
