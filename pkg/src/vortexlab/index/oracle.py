import cmath
import warnings

from ..errors import InconsistentWeightsError
from .weight_data import SplitBundle, Summand

ROUNDING_GUARD = 1e-9


def circle_cohomology_weights(summand: Summand):
    """
    Circle weights on `H^0` and `H^1` of a line summand.

    `H^0(O(k))` carries `(w + j) / 2` for `j in {k, k-2, ..., -k}` with `w` the Delta-weight, and
    `H^1(O(k))`, `k <= -2`, the integers strictly between `a_+` and `a_-`.

    """

    k, w = summand.degree, summand.delta_weight
    h0 = [(w + j) // 2 for j in range(k, -k - 1, -2)] if k >= 0 else []
    h1 = list(range(summand.w_plus + 1, summand.w_minus)) if k <= -2 else []
    return h0, h1


def _circle_oracle(bundle: SplitBundle) -> int:
    total = 0
    for summand in bundle.summands:
        h0, h1 = circle_cohomology_weights(summand)
        total += h0.count(0) - h1.count(0)
    return total


def _cyclic_oracle(bundle: SplitBundle) -> int:
    m = bundle.group.m
    theta = cmath.exp(2j * cmath.pi / m)

    # identity element: Riemann-Roch
    total = complex(bundle.degree + bundle.rank)
    for k in range(1, m):
        for s in bundle.summands:
            total += theta ** (s.w_plus * k) / (1 - theta ** (-k))
            total += theta ** (s.w_minus * k) / (1 - theta ** k)
    value = total / m

    nearest = round(value.real)
    residual = abs(value - nearest)
    if residual >= ROUNDING_GUARD:
        raise InconsistentWeightsError(f"Character average {value} is not an integer (residual {residual:.3e}).")
    if residual > ROUNDING_GUARD / 10:
        warnings.warn(f"Character average residual {residual:.3e} is close to the rounding guard.", RuntimeWarning)
    return int(nearest)


def index_oracle(bundle: SplitBundle, group=None) -> int:
    """
    Equivariant index of a split bundle by direct enumeration.

    Parameters
    ----------
    bundle : SplitBundle
    group : Group, optional
        Must agree with `bundle.group` when given.

    Returns
    -------
    index : int
        Invariant part of `H^0` minus invariant part of `H^1`. Circle actions count zero weights
        in the Borel-Weil description; cyclic actions average the holomorphic Lefschetz numbers
        over the group.

    Raises
    ------
    InconsistentWeightsError
        If the cyclic average misses an integer by more than `1e-9`.

    """

    if group is not None and group != bundle.group:
        raise InconsistentWeightsError(f"Group {group} does not match the bundle's group {bundle.group}.")
    if bundle.group.is_circle:
        return _circle_oracle(bundle)
    return _cyclic_oracle(bundle)
