"""
Moduli of vortices with target `S^2`, their dimension, and the invariant obtained by counting
hyperplane intersections in `CP^p x CP^q`.

"""

from fractions import Fraction
from typing import Sequence

import sympy

from ..errors import DomainError
from ..index import virtual_dimension
from ..stability import s2_pair_window
from .cohomology import ClassB, pair_with_B, tangent_class


def moduli_dimension(B: ClassB) -> int:
    """
    Dimension `p + q` of the moduli `S^p X x S^q X - Delta`.

    The value is cross-checked against the circle virtual dimension
    `<a - 2b, B> + (n - 1)(1 - g)` with `n = 1` and `g = 0`.

    """

    B.require_simple()
    dimension = B.p + B.q
    virtual = virtual_dimension(pair_with_B(tangent_class(), B), n=1, g=0, dim_k=1)
    if virtual != dimension:
        raise DomainError(f"Virtual dimension {virtual} disagrees with the moduli dimension {dimension}.")
    return dimension


def hyperplane_intersection(p: int, q: int, k1: int, k2: int) -> int:
    """
    `<h1^k1 h2^k2, [CP^p x CP^q]>` in `Z[h1, h2] / (h1^(p+1), h2^(q+1))`.

    Examples
    --------
    >>> hyperplane_intersection(3, 1, 3, 1)
    1
    >>> hyperplane_intersection(3, 1, 4, 0)
    0

    """

    if min(p, q, k1, k2) < 0:
        raise DomainError(f"Dimensions and exponents must be non-negative, received {(p, q, k1, k2)}.")
    # multidegree bookkeeping: multiply one hyperplane at a time and truncate
    product = {(0, 0): 1}
    for factor in [(1, 0)] * k1 + [(0, 1)] * k2:
        product = {
            (i + factor[0], j + factor[1]): value
            for (i, j), value in product.items()
            if i + factor[0] <= p and j + factor[1] <= q
        }
    return product.get((p, q), 0)


def invariant_phibar(B: ClassB) -> int:
    """
    The invariant of `B = (p, q)` with `p` insertions of `a + b` and `q` insertions of `b`.

    On the compactified moduli `CP^p x CP^q` the insertions cut out `p` hyperplanes of the first
    factor and `q` of the second; the boundary has real codimension at least two and does not
    contribute. The count is 1.

    """

    B.require_simple()
    return hyperplane_intersection(B.p, B.q, B.p, B.q)


def _descending_padded(coeffs, degree):
    return [sympy.Integer(0)] * (degree + 1 - len(coeffs)) + [sympy.nsimplify(c) for c in reversed(coeffs)]


def sylvester_matrix(f_coeffs: Sequence[int], g_coeffs: Sequence[int]) -> sympy.Matrix:
    """Sylvester matrix of the homogenizations of two ascending coefficient lists."""
    p, q = len(f_coeffs) - 1, len(g_coeffs) - 1
    f = _descending_padded(f_coeffs, p)
    g = _descending_padded(g_coeffs, q)
    size = p + q
    rows = []
    for shift in range(q):
        rows.append([0] * shift + f + [0] * (size - p - 1 - shift))
    for shift in range(p):
        rows.append([0] * shift + g + [0] * (size - q - 1 - shift))
    return sympy.Matrix(size, size, lambda i, j: rows[i][j]) if size else sympy.zeros(0, 0)


def divisor_pair_check(f_coeffs: Sequence[int], g_coeffs: Sequence[int]) -> bool:
    """
    Whether two sections of `O(p)` and `O(q)` on `CP^1` have no common zero.

    Parameters
    ----------
    f_coeffs, g_coeffs : sequence of int
        Ascending coefficients; the formal degree is `len - 1`, and a zero leading coefficient
        places a root at infinity.

    Returns
    -------
    disjoint : bool
        `True` iff the homogeneous resultant, the Sylvester determinant computed exactly with
        fraction-free elimination, is nonzero.

    Raises
    ------
    DomainError
        If either polynomial is zero.

    """

    for name, coeffs in (("f", f_coeffs), ("g", g_coeffs)):
        if not coeffs or all(c == 0 for c in coeffs):
            raise DomainError(f"The polynomial `{name}` is zero.")
    matrix = sylvester_matrix(f_coeffs, g_coeffs)
    if matrix.rows == 0:
        return True
    return matrix.det(method="bareiss") != 0


def divisor_coefficients(points) -> list:
    """
    Ascending coefficients of the binary form vanishing at the points `[alpha:beta]`.

    The form is `prod_j (beta_j x - alpha_j y)` read in the chart `z = x / y`, which realizes
    `S^p CP^1` as `CP^p`.

    """

    coeffs = [Fraction(1)]
    for alpha, beta in points:
        if alpha == 0 and beta == 0:
            raise DomainError("[0:0] is not a point of CP^1.")
        # multiply by (-alpha + beta z)
        linear = [-Fraction(alpha), Fraction(beta)]
        product = [Fraction(0)] * (len(coeffs) + 1)
        for i, x in enumerate(coeffs):
            for j, y in enumerate(linear):
                product[i + j] += x * y
        coeffs = product
    return [int(c) if c.denominator == 1 else c for c in coeffs]


def window_examples(vol=1, c_pairing=Fraction(1, 2), degrees=(-2, -1, 0, 1, 2)) -> list:
    """Stability window of trivial pairs evaluated on a list of degrees."""
    return [
        {"degree": int(d), "vol": str(Fraction(vol)), "c": str(Fraction(c_pairing)), "inside": s2_pair_window(d, vol, c_pairing)}
        for d in degrees
    ]
