"""
Matriz de periodos de la curva de Accola-Maclachlan de género 4 a partir de
la imagen simpléctica de su grupo de automorfismos.
"""
import json
import logging
from dataclasses import replace
from functools import lru_cache
from pathlib import Path

from apps.default.exceptions import CrossCheckError, InvalidInputError
from apps.siegel.models import SymplecticMatrix
from apps.siegel.utils.relations import relation_checks
from apps.siegel.utils.solver import fixed_points

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'


@lru_cache(maxsize=None)
def load_generators(name='accola_maclachlan_g4'):
    """Generadores simplécticos guardados en ``data/<name>.json``."""
    path = DATA_DIR / f"{name}.json"
    if not path.exists():
        raise InvalidInputError(f"No hay datos simplécticos con nombre {name!r}")
    with path.open(encoding='utf-8') as handle:
        payload = json.load(handle)
    generators = tuple(
        SymplecticMatrix(tuple(tuple(row) for row in rows), label)
        for label, rows in payload['generators'].items()
    )
    logger.debug("Cargados %d generadores de %s", len(generators), path.name)
    return generators


def accola_maclachlan_period_matrix(seed=None, starts=None):
    """
    Resuelve el punto fijo y adjunta al informe las comprobaciones de las
    relaciones cerradas. Lanza ``CrossCheckError`` si alguna falla.
    """
    report = fixed_points(load_generators(), seed=seed, starts=starts)
    if not report.is_isolated:
        raise CrossCheckError(f"Se esperaba un punto fijo aislado, dimensión del lugar {report.locus_dimension}")
    checks = relation_checks(report.solution.matrix)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise CrossCheckError(f"La matriz de periodos no cumple: {', '.join(failed)}")
    logger.info("Matriz de periodos de X_8 (g=4): k = %s", report.k)
    return replace(report, relations=checks)
