from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from apps.default.exceptions import InvalidInputError


def standard_form(g):
    """J = [[0, I_g], [-I_g, 0]]."""
    identity = np.eye(g, dtype=np.int64)
    zero = np.zeros((g, g), dtype=np.int64)
    return np.block([[zero, identity], [-identity, zero]])


def _integer_array(entries):
    array = np.array(entries, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InvalidInputError(f"Se espera una matriz cuadrada, se recibió forma {array.shape}")
    if array.shape[0] % 2:
        raise InvalidInputError(f"La dimensión {array.shape[0]} de una matriz simpléctica debe ser par")
    return array


@dataclass(frozen=True)
class SymplecticMatrix:
    """
    R = [[A, B], [C, D]] en Sp(2g, Z), guardada por filas como enteros.
    La construcción comprueba RᵀJR = J de forma exacta.
    """
    entries: tuple
    name: str = ''

    def __post_init__(self):
        array = _integer_array(self.entries)
        j = standard_form(array.shape[0] // 2)
        if not np.array_equal(array.T @ j @ array, j):
            raise InvalidInputError(f"La matriz {self.name or 'dada'} no es simpléctica")
        object.__setattr__(self, 'entries', tuple(tuple(int(v) for v in row) for row in array))

    @classmethod
    def from_array(cls, array, name=''):
        return cls(tuple(tuple(int(v) for v in row) for row in np.asarray(array)), name)

    @classmethod
    def identity(cls, g):
        return cls.from_array(np.eye(2 * g, dtype=np.int64), 'I')

    @classmethod
    def standard(cls, g):
        return cls.from_array(standard_form(g), 'J')

    @property
    def g(self):
        return len(self.entries) // 2

    @cached_property
    def array(self):
        return np.array(self.entries, dtype=np.int64)

    @property
    def blocks(self):
        g, r = self.g, self.array
        return r[:g, :g], r[:g, g:], r[g:, :g], r[g:, g:]

    def inverse(self):
        # R⁻¹ = -J Rᵀ J
        j = standard_form(self.g)
        return SymplecticMatrix.from_array(-j @ self.array.T @ j, f"{self.name}^-1" if self.name else '')

    def __matmul__(self, other):
        if self.g != other.g:
            raise InvalidInputError("Producto de matrices simplécticas de géneros distintos")
        name = f"{self.name}*{other.name}" if self.name and other.name else ''
        return SymplecticMatrix.from_array(self.array @ other.array, name)

    def key(self):
        return self.entries


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """
    Punto Z del semiespacio de Siegel: g×g complejo, simétrico y con parte
    imaginaria definida positiva.
    """
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidInputError(f"Se espera una matriz cuadrada, se recibió forma {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def g(self):
        return self.matrix.shape[0]

    @cached_property
    def symmetry_defect(self):
        return float(np.max(np.abs(self.matrix - self.matrix.T))) if self.g else 0.0

    @cached_property
    def min_imag_eigenvalue(self):
        imag = (self.matrix.imag + self.matrix.imag.T) / 2
        return float(np.linalg.eigvalsh(imag)[0])

    def is_valid(self, symmetry_tol=1e-10, pd_tol=0.0):
        return self.symmetry_defect < symmetry_tol and self.min_imag_eigenvalue > pd_tol

    def symmetrized(self):
        return SiegelPoint((self.matrix + self.matrix.T) / 2)

    def entry(self, i, j):
        return complex(self.matrix[i, j])

    def distance(self, other):
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def __repr__(self):
        return f"SiegelPoint(g={self.g}, sym={self.symmetry_defect:.1e}, min Im={self.min_imag_eigenvalue:.3e})"
