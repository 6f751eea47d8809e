import cmath
from fractions import Fraction

from ..errors import DomainError, InconsistentWeightsError
from .weight_data import WeightData


def index_s1(w: WeightData) -> int:
    """
    Circle-equivariant index `(P_+ + Z_+) + (N_- + Z_-) - rk E`.

    Examples
    --------
    >>> index_s1(WeightData(1, 0, Zp=1, Zm=1))
    1

    """

    if not w.group.is_circle:
        raise DomainError("index_s1 needs circle weight data.")
    return (w.Pp + w.Zp) + (w.Nm + w.Zm) - w.rank


def index_cyclic_fraction(w: WeightData) -> Fraction:
    """The cyclic closed form before the integrality check."""
    if w.group.is_circle:
        raise DomainError("index_cyclic needs cyclic weight data.")
    m, lp = w.group.m, w.group.lprime
    return Fraction(
        w.deg + m * w.rank - m * (w.Pm + w.Np) + lp * (w.Pm + w.Np - w.Pp - w.Nm),
        m,
    )


def index_cyclic(w: WeightData) -> int:
    """
    `Z/m`-equivariant index `(deg + m rk - m (P_- + N_+) + l' (P_- + N_+ - P_+ - N_-)) / m`.

    Raises
    ------
    InconsistentWeightsError
        If the value is not an integer, which happens only for weight data no split bundle carries.

    """

    value = index_cyclic_fraction(w)
    if value.denominator != 1:
        raise InconsistentWeightsError(f"Cyclic index {value} is not an integer: the weight data is inconsistent.")
    return int(value)


def roots_of_unity_sums(m: int, w: int):
    """
    `sum_{k=1}^{m-1} 1 / (1 - theta^k)` and `sum_{k=1}^{m-1} theta^{w k} / (1 - theta^k)`.

    Both are real: `(m - 1) / 2` and `-(m - 1) / 2 + w - 1` for `theta = exp(2 pi i / m)`.

    Returns
    -------
    first, second : (complex, complex)

    """

    if m < 2 or not 1 <= w <= m - 1:
        raise DomainError(f"Need m >= 2 and 1 <= w <= m-1, received m={m}, w={w}.")
    theta = cmath.exp(2j * cmath.pi / m)
    first = sum(1 / (1 - theta ** k) for k in range(1, m))
    second = sum(theta ** (w * k) / (1 - theta ** k) for k in range(1, m))
    return complex(first), complex(second)


def virtual_dimension(c1_pairing: int, n: int, g: int, dim_k: int, c1_g_pairing: int = 0) -> int:
    """
    Expected dimension `<c1(TF) - c1(g), B> + (n - dim K)(1 - g)` of the moduli of solutions.

    Parameters
    ----------
    c1_pairing : int
        Pairing of the equivariant first Chern class of the fibre with `B`.
    n : int
        Complex dimension of the fibre.
    g : int
        Genus of the curve.
    dim_k : int
        Dimension of the gauge group.
    c1_g_pairing : int, optional
        Pairing of the Chern class of the adjoint bundle, zero for abelian groups. Defaults to `0`.

    """

    return int(c1_pairing) - int(c1_g_pairing) + (int(n) - int(dim_k)) * (1 - int(g))


def bubble_codim_check(w: WeightData, base_dim_data=None) -> bool:
    """
    Codimension bound for curves with extra symmetry: `Ind_gamma(E) <= deg E + rk E - 2`.

    For cyclic groups the equivalent integral form
    `m + 1 <= (m - 1) deg + (m - l') (P_- + N_+) + l' (P_+ + N_-)` is checked.

    Parameters
    ----------
    w : WeightData
    base_dim_data : dict, optional
        Unused beyond validation; accepts `{"deg": ..., "rank": ...}` to cross-check `w`.

    Raises
    ------
    DomainError
        If `deg < 1` or `P_+ + N_+ + P_- + N_- < 2`.

    """

    if base_dim_data is not None:
        for key in ("deg", "rank"):
            if key in base_dim_data and base_dim_data[key] != getattr(w, key):
                raise DomainError(f"`{key}` of the base data disagrees with the weight data.")
    if w.deg < 1:
        raise DomainError(f"The bound needs a positive degree, received deg={w.deg}.")
    if w.moving < 2:
        raise DomainError(f"The bound needs P_+ + N_+ + P_- + N_- >= 2, received {w.moving}.")

    if w.group.is_circle:
        return index_s1(w) <= w.deg + w.rank - 2
    m, lp = w.group.m, w.group.lprime
    return m + 1 <= (m - 1) * w.deg + (m - lp) * (w.Pm + w.Np) + lp * (w.Pp + w.Nm)
