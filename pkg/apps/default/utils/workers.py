import logging
import os
from concurrent.futures import ThreadPoolExecutor

from apps.default.utils.config import get_setting

logger = logging.getLogger(__name__)


def worker_count():
    threads = get_setting('SA_THREADS', default=os.cpu_count() or 1)
    return max(1, int(threads))


def run_parallel(func, items):
    """
    Aplica ``func`` a cada elemento usando el pool de hilos.

    El resultado conserva el orden de ``items`` sin importar cuántos hilos
    se usen, así que las salidas son deterministas.
    """
    items = list(items)
    workers = min(worker_count(), len(items)) if items else 1
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug("Ejecutando %d tareas con %d hilos", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
