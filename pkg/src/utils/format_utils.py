# ========================================
# FORMATOS AUXILIARES E IMPRESSÃO DE NÚMEROS
# Arquivos de pesos, vetores fracionários e listas de matchings
# ========================================

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Dict, Iterable, List

from src.models.models import FormatError


def _linhas(text: str):
    for numero, bruta in enumerate(text.splitlines(), start=1):
        linha = bruta.split('#', 1)[0].strip()
        if linha:
            yield numero, linha.split()


def parse_decimal(texto: str) -> Fraction:
    """Converte um decimal (ou fração p/q) em racional exato."""
    try:
        if '/' in texto:
            return Fraction(texto)
        return Fraction(Decimal(texto))
    except (InvalidOperation, ValueError, ZeroDivisionError, OverflowError):
        raise FormatError(f'número inválido: {texto}') from None


def _parse_tagged(text: str, tag: str) -> Dict[str, Fraction]:
    valores: Dict[str, Fraction] = {}
    for numero, tokens in _linhas(text):
        if len(tokens) != 3 or tokens[0] != tag:
            raise FormatError(f'linha {numero}: esperado "{tag} <aresta> <decimal>"')
        e = tokens[1]
        if e in valores:
            raise FormatError(f'linha {numero}: aresta repetida: {e}')
        try:
            valores[e] = parse_decimal(tokens[2])
        except FormatError as erro:
            raise FormatError(f'linha {numero}: {erro}') from None
    return valores


def parse_weight_file(text: str) -> Dict[str, Fraction]:
    """Linhas "w <aresta> <decimal>"."""
    return _parse_tagged(text, 'w')


def parse_vector_file(text: str) -> Dict[str, Fraction]:
    """Linhas "x <aresta> <decimal>"; arestas ausentes valem 0."""
    return _parse_tagged(text, 'x')


def parse_matching_list(text: str) -> List[frozenset]:
    """Um matching por linha, ids de arestas separados por espaço (linha vazia = ∅ com "-")."""
    matchings = []
    for linha in text.splitlines():
        linha = linha.split('#', 1)[0].strip()
        if not linha:
            continue
        if linha == '-':
            matchings.append(frozenset())
        else:
            matchings.append(frozenset(linha.split()))
    return matchings


def format_matching(M: Iterable[str]) -> str:
    """Ids em ordem canônica separados por espaço; "-" para o matching vazio."""
    arestas = sorted(M)
    return ' '.join(arestas) if arestas else '-'


def format_number(valor) -> str:
    """
    Racional como decimal exato: inteiro quando integral, decimal finito quando o
    denominador só tem fatores 2 e 5, senão "p/q".
    """
    valor = Fraction(valor)
    if valor.denominator == 1:
        return str(valor.numerator)
    d = valor.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f'{valor.numerator}/{valor.denominator}'
    casas = max(twos, fives)
    escala = 10 ** casas
    inteiro = abs(valor.numerator) * (escala // valor.denominator)
    sinal = '-' if valor < 0 else ''
    digitos = str(inteiro).rjust(casas + 1, '0')
    return f'{sinal}{digitos[:-casas]}.{digitos[-casas:]}'
