from fractions import Fraction

import numpy as np
import pytest

from vortexlab.errors import DomainError
from vortexlab.stability import (
    FiltrationSpec,
    SubsheafCandidate,
    admissible_c,
    tau_slope,
    is_stable,
    s2_pair_window,
    banfield_reduction_check,
    projective_pair_condition,
    bogomolov_filtration,
)


LINE_IN_PLANE = FiltrationSpec(2, 0, [(1, -1)], [1])


@pytest.mark.parametrize(
    "spec, expected",
    [
        (LINE_IN_PLANE, Fraction(1, 2)),
        (FiltrationSpec(3, 2, [(1, -1), (2, 0)], [1, Fraction(1, 2)]), Fraction(4, 3)),
        (FiltrationSpec(4, 7), Fraction(7, 4)),
        (FiltrationSpec(2, 1, [(2, 1)], [3], vol=5), Fraction(7, 2)),
    ],
)
def test_admissible_c(spec, expected):
    assert admissible_c(spec) == expected


@pytest.mark.parametrize(
    "candidate, slope, stable",
    [
        # the step itself
        (SubsheafCandidate(1, -1, (1,)), Fraction(0), True),
        (SubsheafCandidate(1, 0, (0,)), Fraction(0), True),
        (SubsheafCandidate(1, 1, (0,)), Fraction(1), False),
        # boundary slope equal to c is not stable
        (SubsheafCandidate(1, Fraction(1, 2), (0,)), Fraction(1, 2), False),
    ],
)
def test_line_in_plane(candidate, slope, stable):
    assert tau_slope(LINE_IN_PLANE, candidate) == slope
    assert is_stable(LINE_IN_PLANE, [candidate]).stable is stable


def test_verdict_names_the_worst_candidate():
    candidates = [SubsheafCandidate(1, -2, (0,)), SubsheafCandidate(1, 0, (1,)), SubsheafCandidate(1, -1, (1,))]
    verdict = is_stable(LINE_IN_PLANE, candidates)
    assert not verdict.stable
    assert verdict.worst == candidates[1] and verdict.worst_slope == 1
    assert verdict.c == Fraction(1, 2)


def test_no_candidates_is_vacuously_stable():
    verdict = is_stable(LINE_IN_PLANE, [])
    assert verdict.stable and verdict.worst is None and verdict.worst_slope is None


def test_exact_arithmetic():
    spec = FiltrationSpec(3, Fraction(1, 3), [(2, 0)], [Fraction(1, 7)])
    slope = tau_slope(spec, SubsheafCandidate(2, Fraction(-1, 5), (2,)))
    assert isinstance(slope, Fraction)
    assert slope == (Fraction(-1, 5) + Fraction(2, 7)) / 2


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(R=0, degV=0),
        dict(R=2, degV=0, steps=[(1, 0)], taus=[]),
        dict(R=2, degV=0, steps=[(0, 0)], taus=[1]),
        dict(R=2, degV=0, steps=[(3, 0)], taus=[1]),
        dict(R=3, degV=0, steps=[(2, 0), (1, 0)], taus=[1, 1]),
        dict(R=2, degV=0, steps=[(1, 0)], taus=[-1]),
        dict(R=2, degV=0, vol=0),
        dict(R=2, degV="x"),
    ],
)
def test_invalid_filtrations(kwargs):
    with pytest.raises(DomainError):
        FiltrationSpec(**kwargs)


@pytest.mark.parametrize(
    "candidate",
    [
        SubsheafCandidate(0, 0, (0,)),
        SubsheafCandidate(2, 0, (1,)),
        SubsheafCandidate(1, 0, ()),
        SubsheafCandidate(1, 0, (2,)),
        SubsheafCandidate(1, 0, (-1,)),
    ],
)
def test_invalid_candidates(candidate):
    with pytest.raises(DomainError):
        tau_slope(LINE_IN_PLANE, candidate)


def test_decreasing_meets_rejected():
    spec = FiltrationSpec(3, 0, [(1, 0), (2, 0)], [1, 1])
    with pytest.raises(DomainError):
        tau_slope(spec, SubsheafCandidate(2, 0, (1, 0)))


def test_verdict_invariant_under_rescaling():
    rng = np.random.default_rng(4)
    for _ in range(200):
        R = int(rng.integers(2, 5))
        ranks = sorted({int(r) for r in rng.integers(1, R + 1, size=2)})
        spec = FiltrationSpec(
            R,
            int(rng.integers(-5, 6)),
            [(r, int(rng.integers(-3, 4))) for r in ranks],
            [Fraction(int(rng.integers(0, 5)), int(rng.integers(1, 3))) for _ in ranks],
        )
        rank = int(rng.integers(1, R))
        meets = [min(r, rank) for r in ranks]
        candidates = [SubsheafCandidate(rank, int(rng.integers(-5, 6)), tuple(meets))]
        factor = Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        before = is_stable(spec, candidates)
        after = is_stable(spec.rescaled(factor), [c.rescaled(factor) for c in candidates])
        assert before.stable == after.stable
        assert after.c == factor * before.c


@pytest.mark.parametrize(
    "degE, vol, c, inside",
    [
        (0, 1, Fraction(1, 2), True),
        (1, 1, Fraction(1, 2), True),
        (2, 1, Fraction(1, 2), False),
        (Fraction(3, 2), 1, Fraction(1, 2), False),
        (-1, 2, 0, True),
        (-2, 2, 0, False),
    ],
)
def test_s2_pair_window(degE, vol, c, inside):
    assert s2_pair_window(degE, vol, c) is inside


def test_s2_pair_window_needs_positive_volume():
    with pytest.raises(DomainError):
        s2_pair_window(0, 0, 0)


def test_reduction_conditions():
    assert banfield_reduction_check(-100, 0, 1, phi_in_Fminus=False)
    assert banfield_reduction_check(-1, 2, 1, phi_in_Fminus=True)
    assert not banfield_reduction_check(-2, 2, 1, phi_in_Fminus=True)
    assert projective_pair_condition(0, 2, 1, Fraction(1, 2))
    assert not projective_pair_condition(-1, 1, 1, 0)


@pytest.mark.parametrize(
    "spec, ch2, expected",
    [
        (LINE_IN_PLANE, 0, 1),
        (FiltrationSpec(2, -4, [(1, 0)], [1]), 0, 6),
        (FiltrationSpec(1, 3), 0, 9),
        (LINE_IN_PLANE, Fraction(1, 4), Fraction(3, 4)),
    ],
)
def test_bogomolov(spec, ch2, expected):
    assert bogomolov_filtration(spec, ch2) == expected
