"""
Maximal weights and the moment map along one-parameter subgroups of a diagonal torus action.

"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..errors import DomainError


SUPPORT_TOLERANCE = 1e-12
QUADRATURE_NODES = 64
MODES = ("linear", "projective")


def _is_rational(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


def _is_exact_coordinate(x) -> bool:
    if _is_rational(x):
        return True
    if isinstance(x, complex):
        return x.real.is_integer() and x.imag.is_integer()
    return False


@dataclass(frozen=True)
class MaxWeight:
    """
    Maximal weight, either a finite number or the tagged value `+infinity`.

    Finite values are `Fraction` in exact mode and `float` otherwise.

    """

    value: Optional[Union[Fraction, float]] = None
    infinite: bool = False

    def __post_init__(self):
        if self.infinite == (self.value is not None):
            raise ValueError("A MaxWeight is either finite with a value or infinite without one.")

    @classmethod
    def infinity(cls):
        return cls(None, True)

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    def to_json(self):
        if self.infinite:
            return "infinity"
        if isinstance(self.value, Fraction) and self.value.denominator == 1:
            return int(self.value)
        return float(self.value)

    def __str__(self):
        return "infinity" if self.infinite else str(self.value)


@dataclass(frozen=True, eq=False)
class WeightedPoint:
    """
    Point of a linear or projective space together with the weights of a diagonal generator.

    Parameters
    ----------
    coords : sequence of complex
        Coordinates `x_k` (a lift `x_hat` in projective mode).
    weights : sequence of rational or float
        Eigenvalues `lambda_k` of `i rho(s)`.
    mode : str, optional {"linear", "projective"}
        Defaults to `"projective"`.

    Raises
    ------
    DomainError
        For mismatched lengths, an unknown mode, or a zero lift in projective mode.

    """

    coords: tuple
    weights: tuple
    mode: str = "projective"

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.coords) != len(self.weights):
            raise DomainError(f"Received {len(self.coords)} coordinates but {len(self.weights)} weights.")
        if self.mode not in MODES:
            raise DomainError(f"`mode` must be one of {MODES}, received {self.mode!r}.")
        if self.mode == "projective" and not any(abs(x) > 0 for x in self.coords):
            raise DomainError("A projective point needs a nonzero lift.")

    @property
    def exact(self) -> bool:
        return all(_is_rational(w) for w in self.weights) and all(_is_exact_coordinate(x) for x in self.coords)

    def norms_squared(self) -> np.ndarray:
        return np.abs(np.asarray([complex(x) for x in self.coords])) ** 2

    def support(self) -> list:
        """Indices `k` with `x_k != 0`, exactly in exact mode and up to `1e-12 ||x||` otherwise."""
        if self.exact:
            return [k for k, x in enumerate(self.coords) if x != 0]
        size = math.sqrt(float(np.sum(self.norms_squared())))
        return [k for k, x in enumerate(self.coords) if abs(x) > SUPPORT_TOLERANCE * size]

    def scaled(self, factor):
        return WeightedPoint(tuple(factor * x for x in self.coords), self.weights, self.mode)

    def permuted(self, order: Sequence[int]):
        return WeightedPoint(tuple(self.coords[k] for k in order), tuple(self.weights[k] for k in order), self.mode)

    def support_mask(self) -> np.ndarray:
        """Boolean form of `support`, for masking coordinate arrays."""
        mask = np.zeros(len(self.coords), dtype=bool)
        mask[self.support()] = True
        return mask


def _exact_weight(p: WeightedPoint, w):
    return Fraction(w) if p.exact else float(w)


def max_weight_linear(p: WeightedPoint) -> MaxWeight:
    """
    Maximal weight of a point of a linear representation.

    Returns
    -------
    weight : MaxWeight
        `0` when every weight on the support is non-positive (including `x = 0`), `+infinity`
        otherwise.

    """

    if p.mode != "linear":
        raise DomainError(f"max_weight_linear needs a linear point, received mode {p.mode!r}.")
    if all(p.weights[k] <= 0 for k in p.support()):
        return MaxWeight(_exact_weight(p, 0))
    return MaxWeight.infinity()


def max_weight_projective(p: WeightedPoint) -> MaxWeight:
    """
    Maximal weight of a point of a projective space: the largest weight on the support.

    Examples
    --------
    >>> max_weight_projective(WeightedPoint((1, 1), (1, -1))).value
    Fraction(1, 1)

    """

    if p.mode != "projective":
        raise DomainError(f"max_weight_projective needs a projective point, received mode {p.mode!r}.")
    return MaxWeight(_exact_weight(p, max(p.weights[k] for k in p.support())))


def lambda_t_projective(p: WeightedPoint, t: float) -> float:
    """
    `<mu(exp(i t s) x), s>` along the ray, i.e. the `e^{2 t lambda} |x|**2`-weighted mean weight.

    Only coordinates in `p.support()` enter, so the limit `t -> infinity` is the maximal weight.
    The largest exponent is factored out before exponentiating.

    """

    if p.mode != "projective":
        raise DomainError(f"lambda_t_projective needs a projective point, received mode {p.mode!r}.")
    weights = np.asarray([float(w) for w in p.weights])
    norms = p.norms_squared()
    support = p.support_mask()
    exponents = 2 * t * weights[support]
    masses = norms[support] * np.exp(exponents - np.max(exponents))
    return float(np.sum(weights[support] * masses) / np.sum(masses))


def moment_pairing_projective(p: WeightedPoint) -> float:
    """`<mu(x), s> = sum lambda_k |x_k|**2 / sum |x_k|**2`."""
    return lambda_t_projective(p, 0.0)


class PsiValue(NamedTuple):
    """
    Integral of the moment map along `exp(i t s)`, `0 <= t <= s_scale`.

    `quadrature` is the Gauss-Legendre integral of `lambda_t`; `closed_form` is
    `1/4 log(||g x||**2 / ||x||**2)`. The two differ by a factor of two.

    """

    closed_form: float
    quadrature: float


def psi_projective(p: WeightedPoint, s_scale: float, nodes: int = QUADRATURE_NODES) -> PsiValue:
    """
    Both evaluations of the integral of the moment map on the ray through `p`.

    Parameters
    ----------
    p : WeightedPoint
        Projective point.
    s_scale : float
        Length of the ray, `g = exp(s_scale * s)`.
    nodes : int, optional
        Gauss-Legendre nodes. Defaults to `64`.

    Returns
    -------
    psi : PsiValue

    """

    if p.mode != "projective":
        raise DomainError(f"psi_projective needs a projective point, received mode {p.mode!r}.")
    if s_scale == 0:
        return PsiValue(0.0, 0.0)

    weights = np.asarray([float(w) for w in p.weights])
    norms = p.norms_squared()
    support = p.support_mask()
    exponents = 2 * s_scale * weights[support]
    top = np.max(exponents)
    log_ratio = top + math.log(np.sum(norms[support] * np.exp(exponents - top))) - math.log(np.sum(norms[support]))

    x, w = leggauss(nodes)
    half = s_scale / 2
    quadrature = half * sum(wi * lambda_t_projective(p, half * (xi + 1)) for xi, wi in zip(x, w))
    return PsiValue(0.25 * log_ratio, float(quadrature))


S2_DIRECTIONS = {"+i": (-1, 1), "-i": (1, -1)}


def _s2_point(point):
    x, y = point
    if x == 0 and y == 0:
        raise DomainError("[0:0] is not a point of the sphere.")
    return x, y


def max_weight_s2(point, direction: str = "+i") -> int:
    """
    Maximal weight of `[x:y]` on `S^2 = CP^1` for the rotation `+i` or `-i`.

    Returns
    -------
    weight : int
        For `+i`: `1` if `y != 0` and `-1` if `y = 0`. For `-i`: `1` if `x != 0` and `-1` otherwise.

    """

    x, y = _s2_point(point)
    if direction not in S2_DIRECTIONS:
        raise DomainError(f"`direction` must be one of {tuple(S2_DIRECTIONS)}, received {direction!r}.")
    p = WeightedPoint((x, y), S2_DIRECTIONS[direction])
    return int(max_weight_projective(p).value)


def moment_s2(point) -> float:
    """Height `(|y|**2 - |x|**2) / (|x|**2 + |y|**2)`, the pairing of the moment map with `+i`."""
    x, y = _s2_point(point)
    return moment_pairing_projective(WeightedPoint((x, y), S2_DIRECTIONS["+i"]))
