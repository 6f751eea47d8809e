import logging
import warnings
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from ..errors import DomainError, UnstableError
from .maximal import WeightedPoint, max_weight_projective, lambda_t_projective

logger = logging.getLogger(__name__)

TARGET_RESIDUAL = 1e-10
MAX_BRACKET_EXPANSIONS = 200


class KempfNessResult(NamedTuple):
    point: np.ndarray
    t: float
    iterations: int
    residual: float


def is_analytically_stable(p: WeightedPoint, c_offset: float) -> bool:
    """
    Stability of `p` for `mu - c` along the directions `s` and `-s`.

    Both shifted maximal weights must be positive: `lambda(x; s) - c > 0` and
    `lambda(x; -s) + c > 0`.

    """

    forward = max_weight_projective(p).value
    backward = max_weight_projective(WeightedPoint(p.coords, tuple(-w for w in p.weights))).value
    return forward - c_offset > 0 and backward + c_offset > 0


def kempf_ness_find_zero(p: WeightedPoint, c_offset: float) -> KempfNessResult:
    """
    Find the point of the ray `exp(t s) x` where the shifted moment map vanishes.

    The pairing `lambda_t` is nondecreasing in `t`, so the zero is found by bracketing followed
    by `scipy.optimize.brentq`.

    Parameters
    ----------
    p : WeightedPoint
        Projective point with the weights of the diagonal generator `s`.
    c_offset : float
        Value `c` the pairing `<mu, s>` must reach.

    Returns
    -------
    result : KempfNessResult
        The lift `exp(t* lambda) x`, the time `t*`, the number of root-finder iterations and the
        residual `|lambda_t* - c|`.

    Raises
    ------
    UnstableError
        If the stability precheck fails, in which case the orbit has no zero.

    """

    if p.mode != "projective":
        raise DomainError(f"kempf_ness_find_zero needs a projective point, received mode {p.mode!r}.")
    if not is_analytically_stable(p, c_offset):
        raise UnstableError(
            f"No zero of <mu, s> - {c_offset} on the orbit: the target lies outside the open range of supported weights."
        )

    def shifted(t):
        return lambda_t_projective(p, t) - c_offset

    lower, upper = -1.0, 1.0
    for _ in range(MAX_BRACKET_EXPANSIONS):
        if shifted(lower) < 0 < shifted(upper):
            break
        if shifted(lower) >= 0:
            lower *= 2
        if shifted(upper) <= 0:
            upper *= 2
    else:
        raise UnstableError(f"Could not bracket the zero of <mu, s> - {c_offset}.")

    t_star, info = brentq(shifted, lower, upper, xtol=1e-15, full_output=True)
    residual = abs(shifted(t_star))
    if residual >= TARGET_RESIDUAL:
        warnings.warn(f"Kempf-Ness residual {residual:.3e} above {TARGET_RESIDUAL}.", RuntimeWarning)
    logger.debug("kempf-ness zero at t=%.15g after %d iterations", t_star, info.iterations)

    scale = np.exp(t_star * np.asarray([float(w) for w in p.weights]))
    point = scale * np.asarray([complex(x) for x in p.coords])
    return KempfNessResult(point, float(t_star), int(info.iterations), float(residual))
