"""
Análisis de factibilidad de λ: qué grupos de orden λq actúan sobre
superficies de género q - 1 y con qué signaturas.
"""
import logging

from sympy import isprime

from apps.default.exceptions import InvalidInputError
from apps.default.utils.workers import run_parallel
from apps.groups.managers.group_builder import build_group
from apps.groups.utils.recognition import recognize
from apps.signatures.models import FeasibilityReport, FeasiblePair, GroupScreen
from apps.signatures.utils.riemann_hurwitz import admissible_signatures
from apps.vectors.utils.enumeration import find_vector

logger = logging.getLogger(__name__)

LAMBDAS = tuple(range(1, 9))


def _screen_lambda(q, lam):
    genus = q - 1
    screens, pairs = [], []
    for group in build_group(f"all:lambda={lam},q={q}"):
        name = recognize(group, q)
        signatures = admissible_signatures(group, genus)
        screens.append(GroupScreen(name, group, tuple(signatures)))
        for sigma in signatures:
            if sigma.gamma != 0:
                # no aparece para g = q - 1 y |G| >= q; se deja constancia
                logger.warning("Signatura %s con γ > 0 para %s: no se verifica", sigma, name)
                continue
            if find_vector(group, sigma) is not None:
                pairs.append(FeasiblePair(name, group, sigma))
    logger.info("q=%d, λ=%d: %d grupos, %d pares realizables", q, lam, len(screens), len(pairs))
    return lam, tuple(screens), tuple(pairs)


def lambda_feasibility(q):
    """
    Para cada λ = 1..8 recorre todos los grupos de orden λq, filtra sus
    signaturas por Riemann-Hurwitz y confirma cada una buscando un vector
    generador.
    """
    if not isprime(q) or q < 7:
        raise InvalidInputError(f"q debe ser un primo >= 7, se recibió {q}")
    results = run_parallel(lambda lam: _screen_lambda(q, lam), LAMBDAS)
    verdicts = {lam: pairs for lam, _, pairs in results}
    examined = {lam: screens for lam, screens, _ in results}
    return FeasibilityReport(q=q, verdicts=verdicts, examined=examined)

