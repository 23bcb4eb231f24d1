"""
Jerarquía de errores de cálculo.

Cada error sabe cómo presentarse en la API (``http_status`` y ``code``) y en
la línea de comandos (``exit_code``).
"""


class AccionesError(Exception):
    code = 'ERROR'
    http_status = 500
    exit_code = 1

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def as_response_data(self):
        return {'error': str(self), 'code': self.code}


class InvalidInputError(AccionesError):
    """Parámetros fuera de rango o textos mal formados."""
    code = 'INVALID_INPUT'
    http_status = 400
    exit_code = 2


class UnsupportedError(AccionesError):
    """Entrada válida pero fuera de lo que los algoritmos exhaustivos cubren."""
    code = 'UNSUPPORTED'
    http_status = 422
    exit_code = 2


class CrossCheckError(AccionesError):
    """Dos caminos de cálculo independientes no coinciden."""
    code = 'CROSS_CHECK_FAILED'
    http_status = 500
    exit_code = 3


class ConvergenceError(AccionesError):
    code = 'NO_CONVERGENCE'
    http_status = 500
    exit_code = 3
