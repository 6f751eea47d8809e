"""
Slope stability of filtered vector bundles over a curve, with exact rational arithmetic.

"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple

from ..errors import DomainError


def as_fraction(x, name="value") -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as e:
        raise DomainError(f"`{name}` must be a rational number, received {x!r}.") from e


@dataclass(frozen=True)
class FiltrationSpec:
    """
    Rank and degree of `V`, the steps `V_1 < ... < V_s` and their parameters.

    Parameters
    ----------
    R : int
        Rank of `V`.
    degV : int | Fraction
        Degree of `V`.
    steps : sequence of (int, int)
        `(rank, degree)` of every step, ranks strictly increasing in `(0, R]`.
    taus : sequence of rationals
        Non-negative parameters `tau_k`, one per step.
    vol : rational, optional
        Volume of the curve. Defaults to `1`.

    """

    R: int
    degV: Fraction
    steps: Tuple[Tuple[int, Fraction], ...] = ()
    taus: Tuple[Fraction, ...] = ()
    vol: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "degV", as_fraction(self.degV, "degV"))
        object.__setattr__(self, "steps", tuple((int(r), as_fraction(d, "steps")) for r, d in self.steps))
        object.__setattr__(self, "taus", tuple(as_fraction(t, "taus") for t in self.taus))
        object.__setattr__(self, "vol", as_fraction(self.vol, "vol"))

        if self.R < 1:
            raise DomainError(f"`R` must be positive, received {self.R}.")
        if len(self.taus) != len(self.steps):
            raise DomainError(f"Received {len(self.steps)} steps but {len(self.taus)} parameters.")
        ranks = [r for r, _ in self.steps]
        if ranks and (ranks[0] <= 0 or ranks[-1] > self.R or any(a >= b for a, b in zip(ranks, ranks[1:]))):
            raise DomainError(f"Step ranks must satisfy 0 < r_1 < ... < r_s <= R={self.R}, received {ranks}.")
        if any(t < 0 for t in self.taus):
            raise DomainError(f"Parameters must be non-negative, received {[str(t) for t in self.taus]}.")
        if self.vol <= 0:
            raise DomainError(f"`vol` must be positive, received {self.vol}.")

    def rescaled(self, factor):
        """Multiply every degree and every parameter by `factor`."""
        factor = as_fraction(factor, "factor")
        return FiltrationSpec(
            self.R,
            factor * self.degV,
            tuple((r, factor * d) for r, d in self.steps),
            tuple(factor * t for t in self.taus),
            self.vol,
        )


@dataclass(frozen=True)
class SubsheafCandidate:
    """A subsheaf `V'` by rank, degree and the ranks of `V_k meet V'`."""

    rank: int
    degree: Fraction
    meet_ranks: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degree", as_fraction(self.degree, "degree"))
        object.__setattr__(self, "meet_ranks", tuple(int(m) for m in self.meet_ranks))

    def validate(self, spec: FiltrationSpec):
        if not 0 < self.rank < spec.R:
            raise DomainError(f"Candidate rank must lie in (0, {spec.R}), received {self.rank}.")
        if len(self.meet_ranks) != len(spec.steps):
            raise DomainError(f"Candidate needs {len(spec.steps)} meet ranks, received {len(self.meet_ranks)}.")
        for (r, _), meet in zip(spec.steps, self.meet_ranks):
            if not 0 <= meet <= min(r, self.rank):
                raise DomainError(f"Meet rank {meet} must lie in [0, min({r}, {self.rank})].")
        if any(a > b for a, b in zip(self.meet_ranks, self.meet_ranks[1:])):
            raise DomainError(f"Meet ranks must be nondecreasing, received {list(self.meet_ranks)}.")

    def rescaled(self, factor):
        return SubsheafCandidate(self.rank, as_fraction(factor, "factor") * self.degree, self.meet_ranks)


class StabilityVerdict(NamedTuple):
    stable: bool
    c: Fraction
    worst: Optional[SubsheafCandidate]
    worst_slope: Optional[Fraction]


def admissible_c(spec: FiltrationSpec) -> Fraction:
    """
    The only central parameter compatible with the degrees: `(deg V + sum tau_k rk V_k) / R`.

    Examples
    --------
    >>> admissible_c(FiltrationSpec(2, 0, [(1, -1)], [1]))
    Fraction(1, 2)

    """

    return (spec.degV + sum(t * r for t, (r, _) in zip(spec.taus, spec.steps))) / spec.R


def tau_slope(spec: FiltrationSpec, candidate: SubsheafCandidate) -> Fraction:
    """`(deg V' + sum tau_k rk(V_k meet V')) / rk V'`."""
    candidate.validate(spec)
    return (candidate.degree + sum(t * m for t, m in zip(spec.taus, candidate.meet_ranks))) / candidate.rank


def is_stable(spec: FiltrationSpec, candidates: Sequence[SubsheafCandidate]) -> StabilityVerdict:
    """
    Check the strict slope inequality for every candidate subsheaf.

    The candidates are caller data; a `True` verdict certifies only the supplied list.

    Parameters
    ----------
    spec : FiltrationSpec
    candidates : sequence of SubsheafCandidate

    Returns
    -------
    verdict : StabilityVerdict
        Whether every `tau_slope` is below `admissible_c`, with the candidate of largest slope as witness.

    """

    c = admissible_c(spec)
    worst, worst_slope = None, None
    for candidate in candidates:
        slope = tau_slope(spec, candidate)
        if worst_slope is None or slope > worst_slope:
            worst, worst_slope = candidate, slope
    stable = worst_slope is None or worst_slope < c
    return StabilityVerdict(stable, c, worst, worst_slope)


def s2_pair_window(degE, vol, c_pairing) -> bool:
    """
    Stability window of a trivial pair with target `S^2`: `|deg E - vol <c, i>| < vol`.

    The inequality is strict, so the boundary is rejected.

    """

    vol = as_fraction(vol, "vol")
    if vol <= 0:
        raise DomainError(f"`vol` must be positive, received {vol}.")
    return abs(as_fraction(degE, "degE") - vol * as_fraction(c_pairing, "c_pairing")) < vol


def banfield_reduction_check(deg_sigma_chi, chi_c_pairing, vol, phi_in_Fminus: bool) -> bool:
    """
    Condition of a reduction `(sigma, chi)` that a stable pair must satisfy.

    True when the Higgs field is not contained in `F^-(sigma, chi)` (the total degree is then
    infinite), and otherwise iff `deg(sigma, chi) + <i chi, c> vol > 0`.

    """

    if not phi_in_Fminus:
        return True
    return as_fraction(deg_sigma_chi) + as_fraction(chi_c_pairing) * as_fraction(vol) > 0


def projective_pair_condition(deg_sigma_chi, vol, lambda_k, chi_c_pairing) -> bool:
    """`deg(sigma, chi) + vol lambda_k - vol <chi, c> > 0` for pairs with a projective fibre."""
    vol = as_fraction(vol, "vol")
    return as_fraction(deg_sigma_chi) + vol * as_fraction(lambda_k) - vol * as_fraction(chi_c_pairing) > 0


def bogomolov_filtration(spec: FiltrationSpec, ch2_pairing=0) -> Fraction:
    """
    Left-hand side of the Bogomolov inequality for a filtration.

    Returns
    -------
    value : Fraction
        `deg V * c - sum tau_k deg V_k - ch2_pairing` with `c = admissible_c(spec)`. It is
        non-negative whenever the filtered bundle carries a solution.

    """

    return (
        spec.degV * admissible_c(spec)
        - sum(t * d for t, (_, d) in zip(spec.taus, spec.steps))
        - as_fraction(ch2_pairing, "ch2_pairing")
    )
