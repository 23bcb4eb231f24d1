"""
Puntos fijos de un grupo finito de matrices simplécticas en el semiespacio
de Siegel.

Para cada generador R = [[A, B], [C, D]] la condición R·Z = Z es

    F_R(Z) = AZ + ZCZ - ZD - B = 0,

cuadrática en las g(g+1)/2 incógnitas complejas de Z simétrica. Se resuelve
por Gauss-Newton complejo desde varios arranques; el arranque 0 es el punto
invariante construido a partir de la forma hermítica promediada del grupo.
"""
import logging
from collections import deque

import numpy as np
import scipy.linalg as LA

from apps.default.exceptions import ConvergenceError, CrossCheckError, InvalidInputError, UnsupportedError
from apps.default.utils.config import get_setting
from apps.default.utils.workers import run_parallel
from apps.siegel.models import FixedPointReport, SiegelPoint, standard_form
from apps.siegel.utils.action import probe_action_convention

logger = logging.getLogger(__name__)

MAX_GENUS = 8


def _solver_setting(key, default):
    return get_setting('SIEGEL_SOLVER', key, default)


def _upper_indices(g):
    return [(i, j) for i in range(g) for j in range(i, g)]


def _to_matrix(values, g):
    m = np.zeros((g, g), dtype=np.complex128)
    for value, (i, j) in zip(values, _upper_indices(g)):
        m[i, j] = m[j, i] = value
    return m


def _to_vector(m):
    return np.array([m[i, j] for i, j in _upper_indices(m.shape[0])], dtype=np.complex128)


def _blocks(generators):
    return [tuple(block.astype(np.complex128) for block in r.blocks) for r in generators]


def residual(blocks, z):
    """Pila de vec(AZ + ZCZ - ZD - B) sobre los generadores."""
    return np.concatenate([(a @ z + z @ c @ z - z @ d - b).ravel() for a, b, c, d in blocks])


def jacobian(blocks, z):
    """Derivada compleja respecto a las entradas de la parte triangular superior."""
    g = z.shape[0]
    columns = []
    for i, j in _upper_indices(g):
        e = np.zeros((g, g), dtype=np.complex128)
        e[i, j] = e[j, i] = 1
        columns.append(np.concatenate([(a @ e + e @ c @ z + z @ c @ e - e @ d).ravel() for a, _, c, d in blocks]))
    return np.column_stack(columns) if columns else np.zeros((0, 0), dtype=np.complex128)


def group_closure(generators, cap=None):
    """Todos los elementos del grupo generado, por BFS sobre productos a derecha."""
    cap = cap or _solver_setting('GROUP_CLOSURE_CAP', 5000)
    g = generators[0].g
    identity = np.eye(2 * g, dtype=np.int64)
    arrays = [r.array for r in generators]
    seen = {identity.tobytes(): identity}
    frontier = deque([identity])
    while frontier:
        current = frontier.popleft()
        for r in arrays:
            product = current @ r
            key = product.tobytes()
            if key not in seen:
                seen[key] = product
                frontier.append(product)
                if len(seen) > cap:
                    raise UnsupportedError(f"El grupo generado supera {cap} elementos; se requiere un grupo finito")
    logger.debug("Clausura del grupo: %d elementos", len(seen))
    return list(seen.values())


def invariant_seed(generators):
    """
    Punto fijo construido a partir de S = Σ RᵀR sobre el grupo generado: el
    operador S⁻¹J conmuta con el grupo y el espacio de sus autovectores por
    filas con Im μ de un mismo signo da [P Q] con Z = P⁻¹Q fijo.
    """
    g = generators[0].g
    elements = group_closure(generators)
    s = sum(r.T @ r for r in elements).astype(np.float64)
    operator = LA.solve(s, standard_form(g).astype(np.float64))
    values, vectors = LA.eig(operator.T)
    for sign in (1, -1):
        mask = sign * values.imag > 0
        if mask.sum() != g:
            raise CrossCheckError(f"S⁻¹J tiene {mask.sum()} autovalores con Im de signo {sign:+d}, se esperaban {g}")
        rows = vectors[:, mask].T
        z = LA.solve(rows[:, :g], rows[:, g:])
        point = SiegelPoint((z + z.T) / 2)
        if point.min_imag_eigenvalue > 0:
            return point
    raise CrossCheckError("Ningún signo de Im μ da un punto del semiespacio de Siegel")


def _random_start(rng, g):
    x = rng.normal(scale=0.5, size=(g, g))
    scale = rng.uniform(0.5, 2.0)
    return SiegelPoint((x + x.T) / 2 + 1j * scale * np.eye(g))


def newton(blocks, start, max_iterations=None, tol=None):
    """
    Gauss-Newton complejo desde ``start``. Devuelve (punto, norma del residuo,
    iteraciones) o None si diverge.
    """
    max_iterations = max_iterations or _solver_setting('MAX_ITERATIONS', 60)
    tol = tol or _solver_setting('RESIDUAL_TOL', 1e-10)
    g = start.g
    z = start.matrix.copy()
    norm = np.inf
    for iteration in range(max_iterations + 1):
        f = residual(blocks, z)
        norm = float(np.max(np.abs(f))) if f.size else 0.0
        if not np.isfinite(norm):
            return None
        if norm < tol:
            return SiegelPoint(z), norm, iteration
        step, *_ = LA.lstsq(jacobian(blocks, z), -f)
        z = z + _to_matrix(step, g)
    logger.debug("Newton sin converger: residuo %.2e tras %d iteraciones", norm, max_iterations)
    return None


def _residual_norms(blocks, z):
    return tuple(float(np.max(np.abs(a @ z + z @ c @ z - z @ d - b))) for a, b, c, d in blocks)


def _tangent_basis(jac, g, rank):
    if jac.size == 0:
        return ()
    basis = LA.null_space(jac, rcond=1e-8)
    if basis.shape[1] != jac.shape[1] - rank:
        raise CrossCheckError("Núcleo del jacobiano incoherente con su rango")
    return tuple(_to_matrix(basis[:, t], g) for t in range(basis.shape[1]))


def fixed_points(generators, seed=None, starts=None):
    """
    Resuelve R·Z = Z para todo R en ``generators``.

    Se aceptan las soluciones con residuo < RESIDUAL_TOL y parte imaginaria
    definida positiva; entre ellas se elige la de menor residuo y, a igualdad,
    la menor en orden lexicográfico de sus entradas redondeadas.
    """
    generators = tuple(generators)
    if not generators:
        raise InvalidInputError("Se necesita al menos un generador")
    g = generators[0].g
    if any(r.g != g for r in generators):
        raise InvalidInputError("Todos los generadores deben tener el mismo género")
    if g > MAX_GENUS:
        raise UnsupportedError(f"Género {g} mayor que {MAX_GENUS}")
    seed = _solver_setting('SEED', 0) if seed is None else seed
    starts = starts or _solver_setting('STARTS', 64)
    pd_tol = _solver_setting('PD_TOL', 1e-12)

    rng = np.random.default_rng(seed)
    points = [invariant_seed(generators)] + [_random_start(rng, g) for _ in range(starts - 1)]
    blocks = _blocks(generators)
    outcomes = run_parallel(lambda start: newton(blocks, start), points)

    accepted = []
    for index, outcome in enumerate(outcomes):
        if outcome is None:
            continue
        point, norm, iterations = outcome
        point = point.symmetrized()
        if point.min_imag_eigenvalue <= pd_tol:
            logger.debug("Arranque %d: solución fuera del semiespacio (min Im = %.2e)", index, point.min_imag_eigenvalue)
            continue
        accepted.append((norm, tuple(np.round(_to_vector(point.matrix), 8).view(np.float64)), index, point))
    failed = starts - len(accepted)
    if failed:
        logger.warning("%d de %d arranques sin solución admisible", failed, starts)
    if not accepted:
        raise ConvergenceError(f"Ningún arranque de Newton converge a un punto admisible ({starts} arranques)")

    _, _, index, solution = min(accepted, key=lambda item: item[:3])
    jac = jacobian(blocks, solution.matrix)
    rank = int(np.linalg.matrix_rank(jac, tol=1e-8)) if jac.size else 0
    locus_dimension = len(_upper_indices(g)) - rank
    probe = SiegelPoint(0.25 * np.ones((g, g)) + 1j * np.eye(g))
    convention = probe_action_convention(generators[0], generators[-1], probe)
    logger.info("Punto fijo desde el arranque %d: residuo %.2e, dimensión del lugar %d",
                index, max(_residual_norms(blocks, solution.matrix)), locus_dimension)
    return FixedPointReport(
        generators=generators,
        solution=solution,
        residuals=_residual_norms(blocks, solution.matrix),
        locus_dimension=locus_dimension,
        tangent_basis=_tangent_basis(jac, g, rank) if locus_dimension else (),
        starts=starts,
        converged_starts=len(accepted),
        seed=seed,
        convention=convention,
    )
