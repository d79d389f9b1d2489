# ========================================
# CONFIGURAÇÃO
# Sistema de Matchings Estáveis
# ========================================

import logging
import os

logger = logging.getLogger(__name__)

# Carrega variáveis de ambiente do arquivo .env (se existir)
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    logger.warning('python-dotenv não instalado; usando variáveis de ambiente do sistema')

DEFAULT_MAX_ENUMERATION = 1_000_000
DEFAULT_TOLERANCE = 1e-9
DEFAULT_LOG_LEVEL = 'WARNING'


def _get_env(key_names, default=None):
    for k in key_names:
        v = os.environ.get(k)
        if v:
            return v
    return default


def _as_number(texto, conversor, padrao, nome):
    if texto is None:
        return padrao
    try:
        valor = conversor(texto)
    except ValueError:
        logger.warning('Valor inválido para %s: %r; usando %r', nome, texto, padrao)
        return padrao
    if valor <= 0:
        logger.warning('%s deve ser positivo; usando %r', nome, padrao)
        return padrao
    return valor


def get_config():
    """Retorna um dicionário com a configuração, aceitando nomes alternativos de variáveis."""
    max_enumeration = _as_number(
        _get_env(['MATCHING_MAX_ENUM', 'MATCHING_MAX']), int,
        DEFAULT_MAX_ENUMERATION, 'MATCHING_MAX_ENUM',
    )
    tolerance = _as_number(
        _get_env(['MATCHING_TOLERANCE']), float, DEFAULT_TOLERANCE, 'MATCHING_TOLERANCE',
    )
    log_level = (_get_env(['MATCHING_LOG_LEVEL', 'LOG_LEVEL']) or DEFAULT_LOG_LEVEL).upper()
    return {
        'max_enumeration': max_enumeration,
        'tolerance': tolerance,
        'log_level': log_level,
    }
