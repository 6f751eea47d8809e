from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Tuple

import numpy as np
import sympy

from ..errors import DomainError


SVD_TOLERANCE = 1e-9


def _is_exact_matrix(rows) -> bool:
    return all(isinstance(x, Rational) and not isinstance(x, bool) for row in rows for x in row)


def _as_rows(matrix) -> list:
    return [list(row) for row in matrix]


def matrix_rank(matrix) -> int:
    """
    Rank of a matrix given as rows.

    Rational entries use exact elimination (`sympy.Matrix.rank`); anything else uses the SVD with
    singular values below `1e-9` times the largest counted as zero.

    """

    rows = _as_rows(matrix)
    if not rows or not rows[0]:
        return 0
    if _is_exact_matrix(rows):
        return int(sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]).rank())
    singular = np.linalg.svd(np.asarray(rows, dtype=np.complex128), compute_uv=False)
    if singular.size == 0 or singular[0] == 0:
        return 0
    return int(np.sum(singular > SVD_TOLERANCE * singular[0]))


def _hstack(a, b):
    return [list(ra) + list(rb) for ra, rb in zip(_as_rows(a), _as_rows(b))]


def intersection_dimension(a, b) -> int:
    """`dim(span a meet span b) = rk a + rk b - rk [a | b]` for column bases given as rows."""
    return matrix_rank(a) + matrix_rank(b) - matrix_rank(_hstack(a, b))


@dataclass(frozen=True, eq=False)
class GrassData:
    """
    A `k`-plane in `C^R` and the eigen-flag of a Hermitian generator.

    Parameters
    ----------
    ambient_dim : int
        Dimension `R`.
    plane : sequence of sequences
        `R x k` matrix whose columns span the plane.
    eigen_flags : sequence of (eigenvalue, basis)
        Strictly increasing eigenvalues `lambda_j` paired with `R x dim E_j` bases of the
        cumulative subspaces `E_1 < E_2 < ... < E_r = C^R`.
    tau : rational or float, optional
        Scale. Defaults to `1`.

    Raises
    ------
    DomainError
        If the plane is rank deficient, the eigenvalues do not increase, the flag does not
        increase strictly or does not end at `C^R`.

    """

    ambient_dim: int
    plane: tuple
    eigen_flags: Tuple[tuple, ...]
    tau: object = 1

    def __post_init__(self):
        R = self.ambient_dim
        plane = _as_rows(self.plane)
        object.__setattr__(self, "plane", plane)
        object.__setattr__(self, "eigen_flags", tuple((value, _as_rows(basis)) for value, basis in self.eigen_flags))

        if len(plane) != R:
            raise DomainError(f"The plane basis must have {R} rows, received {len(plane)}.")
        if matrix_rank(plane) != len(plane[0]):
            raise DomainError("The plane basis is rank deficient.")
        if not self.eigen_flags:
            raise DomainError("At least one eigenvalue is required.")

        values = [value for value, _ in self.eigen_flags]
        if any(a >= b for a, b in zip(values, values[1:])):
            raise DomainError(f"Eigenvalues must increase strictly, received {values}.")

        dims = []
        for _, basis in self.eigen_flags:
            if len(basis) != R:
                raise DomainError(f"Flag bases must have {R} rows, received {len(basis)}.")
            dims.append(matrix_rank(basis))
        for (_, small), (_, large) in zip(self.eigen_flags, self.eigen_flags[1:]):
            if intersection_dimension(small, large) != matrix_rank(small) or matrix_rank(large) <= matrix_rank(small):
                raise DomainError("The eigen-flag must increase strictly.")
        if dims[-1] != R:
            raise DomainError(f"The last flag space must be all of C^{R}, it has dimension {dims[-1]}.")
        if not self.tau > 0:
            raise DomainError(f"`tau` must be positive, received {self.tau}.")

    @property
    def exact(self) -> bool:
        scalars = [self.tau] + [value for value, _ in self.eigen_flags]
        return _is_exact_matrix([scalars]) and _is_exact_matrix(self.plane)

    @property
    def plane_dim(self) -> int:
        return len(self.plane[0])


def max_weight_grassmann(g: GrassData):
    """
    Maximal weight of a plane in a Grassmannian.

    Parameters
    ----------
    g : GrassData

    Returns
    -------
    weight : Fraction | float
        `tau (dim(pi) lambda_r + sum_{j<r} dim(pi meet E_j) (lambda_j - lambda_{j+1}))`, exact
        when every input is rational.

    Examples
    --------
    >>> g = GrassData(2, [[1], [0]], [(-1, [[1], [0]]), (1, [[1, 0], [0, 1]])])
    >>> max_weight_grassmann(g)
    Fraction(-1, 1)

    """

    cast = Fraction if g.exact else float
    values = [cast(value) for value, _ in g.eigen_flags]
    total = g.plane_dim * values[-1]
    for j in range(len(values) - 1):
        meet = intersection_dimension(g.plane, g.eigen_flags[j][1])
        total += meet * (values[j] - values[j + 1])
    return cast(g.tau) * total


def _adapted_basis(g: GrassData):
    """Orthonormal eigenbasis of the generator adapted to the flag, with its eigenvalues."""
    R = g.ambient_dim
    vectors = np.zeros((R, 0), dtype=np.complex128)
    eigenvalues = []
    for value, basis in g.eigen_flags:
        block = np.asarray(basis, dtype=np.complex128)
        block = block - vectors @ (vectors.conj().T @ block)
        u, singular, _ = np.linalg.svd(block, full_matrices=False)
        keep = singular > SVD_TOLERANCE * max(1.0, singular[0] if singular.size else 0.0)
        vectors = np.hstack([vectors, u[:, keep]])
        eigenvalues.extend([float(value)] * int(np.sum(keep)))
    return vectors, np.asarray(eigenvalues)


def lambda_t_grassmann(g: GrassData, t: float) -> float:
    """
    `tau Tr(P_t S)` with `P_t` the orthogonal projector onto `exp(t S) pi`.

    Increases to `max_weight_grassmann` as `t` grows.

    """

    vectors, eigenvalues = _adapted_basis(g)
    plane = np.asarray(g.plane, dtype=np.complex128)
    coefficients = vectors.conj().T @ plane
    coefficients *= np.exp(t * (eigenvalues - eigenvalues.max()))[:, None]
    q, _ = np.linalg.qr(coefficients)
    return float(g.tau) * float(np.real(np.trace(q.conj().T @ (eigenvalues[:, None] * q))))
