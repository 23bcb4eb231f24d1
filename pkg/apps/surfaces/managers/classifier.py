"""
Clasificación de las superficies de género q - 1 con grupo de orden λq.
"""
import logging

from sympy import isprime

from apps.default.exceptions import InvalidInputError
from apps.default.utils.config import get_setting
from apps.default.utils.workers import run_parallel
from apps.signatures.managers.feasibility import lambda_feasibility
from apps.surfaces.models import ClassificationReport, PairSummary
from apps.vectors.models import expand_shape
from apps.vectors.utils.orbits import orbits

logger = logging.getLogger(__name__)

# (nombre reconocido, forma de la signatura) -> estrato y cómo se cuenta
STRATA = {
    ('AM(q)', '(0;2,4,2q)'): ('X8', 'classes'),
    ('C_q |x4 C_4', '(0;4,4,q)'): ('X4', 'classes'),
    ('C_q x C_3', '(0;3,q,3q)'): ('X3', 'classes'),
    ('C_q x C_2', '(0;q,2q,2q)'): ('X2k', 'non_extendable'),
    ('D_q', '(0;2,2,q,q)'): ('K', 'classes'),
}
STRATA_ORDER = ('X8', 'X4', 'X3', 'X2k', 'K')


def _stratum(name, signature, q):
    for (family, shape), (tag, mode) in STRATA.items():
        if family == name and expand_shape(shape, q) == signature:
            return tag, mode
    return None, None


def _count(report, mode):
    if mode == 'non_extendable':
        return len(report.non_extendable)
    return report.iso_class_count


def check_q(q):
    low = get_setting('CLASSIFY', 'MIN_Q', 7)
    high = get_setting('CLASSIFY', 'MAX_Q', 23)
    if not isprime(q) or not low <= q <= high:
        raise InvalidInputError(f"q debe ser un primo entre {low} y {high}, se recibió {q}")


def classify(q):
    """
    Recorre los λ realizables, calcula las órbitas de cada par (grupo,
    signatura) y cuenta los estratos X8, X4, X3, X2k y K. El estrato K
    cuenta todas las órbitas de D_q, incluida la de la familia C_g.
    """
    check_q(q)
    feasibility = lambda_feasibility(q)
    work = [(lam, pair) for lam in feasibility.realizable_lambdas for pair in feasibility.pairs(lam)]

    def summarize(item):
        lam, pair = item
        tag, mode = _stratum(pair.name, pair.signature, q)
        report = orbits(pair.group, pair.signature, extensions=tag is not None)
        return PairSummary(lam, pair.name, report, tag), (tag, _count(report, mode) if tag else 0)

    results = run_parallel(summarize, work)
    strata = {}
    for _, (tag, count) in results:
        if tag and count:
            strata[tag] = strata.get(tag, 0) + count
    strata = {tag: strata[tag] for tag in STRATA_ORDER if tag in strata}
    logger.info("q=%d: λ realizables %s, estratos %s", q, feasibility.realizable_lambdas, strata)
    return ClassificationReport(q, feasibility, tuple(summary for summary, _ in results), strata)
