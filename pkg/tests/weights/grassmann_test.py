from fractions import Fraction

import pytest

from vortexlab.errors import DomainError
from vortexlab.weights import (
    GrassData,
    matrix_rank,
    intersection_dimension,
    max_weight_grassmann,
    lambda_t_grassmann,
)


FLAG_2 = [(-1, [[1], [0]]), (1, [[1, 0], [0, 1]])]


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1]], 2),
        ([[0, 0], [0, 0]], 0),
        ([[Fraction(1, 3), 1], [1, 3]], 1),
        ([[1.0, 2.0], [2.0, 4.0 + 1e-13]], 1),
        ([[1j, 1], [1, -1j]], 1),
    ],
)
def test_matrix_rank(matrix, expected):
    assert matrix_rank(matrix) == expected


def test_intersection_dimension():
    e1 = [[1], [0], [0]]
    e12 = [[1, 0], [0, 1], [0, 0]]
    e23 = [[0, 0], [1, 0], [0, 1]]
    assert intersection_dimension(e1, e12) == 1
    assert intersection_dimension(e12, e23) == 1
    assert intersection_dimension(e1, e23) == 0


@pytest.mark.parametrize(
    "plane, expected",
    [
        ([[1], [0]], -1),
        ([[0], [1]], 1),
        ([[1], [1]], 1),
        ([[1, 0], [0, 1]], 0),
    ],
)
def test_two_dimensional(plane, expected):
    weight = max_weight_grassmann(GrassData(2, plane, FLAG_2))
    assert weight == expected and isinstance(weight, Fraction)


def test_three_step_flag():
    flags = [(-2, [[1], [0], [0]]), (0, [[1, 0], [0, 1], [0, 0]]), (Fraction(3, 2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])]
    # plane spanned by e1 and e2 + e3
    plane = [[1, 0], [0, 1], [0, 1]]
    weight = max_weight_grassmann(GrassData(3, plane, flags, tau=2))
    assert weight == 2 * (2 * Fraction(3, 2) + 1 * (-2 - 0) + 1 * (0 - Fraction(3, 2)))


def test_float_mode():
    weight = max_weight_grassmann(GrassData(2, [[1.0], [1.0]], FLAG_2, tau=0.5))
    assert isinstance(weight, float) and weight == pytest.approx(0.5)


@pytest.mark.parametrize("plane", [[[1], [0]], [[0], [1]], [[1], [1]], [[1], [2j]]])
def test_lambda_t_approaches_max_weight(plane):
    g = GrassData(2, plane, FLAG_2)
    curve = [lambda_t_grassmann(g, t) for t in (-2.0, 0.0, 1.0, 5.0, 20.0)]
    assert all(b >= a - 1e-12 for a, b in zip(curve, curve[1:]))
    assert curve[-1] == pytest.approx(float(max_weight_grassmann(g)), abs=1e-9)


def test_lambda_t_generic_line():
    g = GrassData(2, [[1], [1]], FLAG_2)
    assert lambda_t_grassmann(g, 0.0) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    "plane, flags",
    [
        ([[1], [0], [0]], FLAG_2),
        ([[1, 2], [2, 4]], FLAG_2),
        ([[1], [0]], [(1, [[1], [0]]), (-1, [[1, 0], [0, 1]])]),
        ([[1], [0]], [(0, [[1], [0]])]),
        ([[1], [0]], [(0, [[1], [0]]), (1, [[2], [0]]), (2, [[1, 0], [0, 1]])]),
        ([[1], [0]], []),
    ],
)
def test_invalid_data(plane, flags):
    with pytest.raises(DomainError):
        GrassData(2, plane, flags)


def test_invalid_tau():
    with pytest.raises(DomainError):
        GrassData(2, [[1], [0]], FLAG_2, tau=0)
