# ========================================
# CONFIGURAÇÃO DE LOGS
# ========================================

import logging
import sys

FORMATO = '%(asctime)s %(levelname)s [%(name)s] %(message)s'


def configure_logging(level='WARNING'):
    """
    Configura o logger raiz com saída no stderr atual.
    Chamadas repetidas trocam o handler anterior em vez de acumular outro.
    """
    nivel = logging.getLevelName(str(level).upper())
    if not isinstance(nivel, int):
        nivel = logging.WARNING
    raiz = logging.getLogger()
    for antigo in [h for h in raiz.handlers if getattr(h, '_matching_handler', False)]:
        raiz.removeHandler(antigo)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(FORMATO))
    handler._matching_handler = True
    raiz.addHandler(handler)
    raiz.setLevel(nivel)
    return raiz
