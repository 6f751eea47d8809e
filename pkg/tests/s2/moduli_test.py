from fractions import Fraction

import pytest

from vortexlab.errors import DomainError
from vortexlab.s2 import (
    ClassB,
    moduli_dimension,
    hyperplane_intersection,
    invariant_phibar,
    sylvester_matrix,
    divisor_pair_check,
    divisor_coefficients,
    window_examples,
)


@pytest.mark.parametrize("p, q, expected", [(3, 1, 4), (2, 5, 7), (1, 2, 3)])
def test_moduli_dimension(p, q, expected):
    assert moduli_dimension(ClassB(p, q)) == expected


def test_moduli_dimension_needs_simple_class():
    with pytest.raises(DomainError):
        moduli_dimension(ClassB(2, 2))


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 8) for q in range(1, 8) if p != q])
def test_invariant(p, q):
    assert invariant_phibar(ClassB(p, q)) == 1


@pytest.mark.parametrize(
    "p, q, k1, k2, expected",
    [
        (3, 1, 3, 1, 1),
        (3, 1, 4, 0, 0),
        (2, 3, 2, 2, 0),
        (2, 3, 3, 3, 0),
        (0, 0, 0, 0, 1),
    ],
)
def test_hyperplane_intersection(p, q, k1, k2, expected):
    assert hyperplane_intersection(p, q, k1, k2) == expected


def test_sylvester_matrix():
    # z + 2 and z - 3
    matrix = sylvester_matrix([2, 1], [-3, 1])
    assert matrix.tolist() == [[1, 2], [1, -3]]
    assert matrix.det() == -5


@pytest.mark.parametrize(
    "f, g, disjoint",
    [
        ([0, 1], [1, 1], True),
        ([0, 0, 1], [0, 1, 1], False),
        ([1, 2], [2, 4], False),
        # both vanish at infinity
        ([1, 0], [3, 0], False),
        ([1, 0], [0, 1], True),
        ([5], [1, 2, 3], True),
        ([5], [7], True),
        ([2, -3, 1], [6, -5, 1], False),
    ],
)
def test_divisor_pair_check(f, g, disjoint):
    assert divisor_pair_check(f, g) is disjoint
    assert divisor_pair_check(g, f) is disjoint


def test_zero_polynomial():
    with pytest.raises(DomainError):
        divisor_pair_check([0, 0], [1, 1])
    with pytest.raises(DomainError):
        divisor_pair_check([1], [])


@pytest.mark.parametrize(
    "points, expected",
    [
        ([(1, 1)], [-1, 1]),
        ([(0, 1)], [0, 1]),
        ([(1, 0)], [-1, 0]),
        ([(1, 1), (2, 1)], [2, -3, 1]),
        ([(Fraction(1, 2), 1)], [Fraction(-1, 2), 1]),
        ([], [1]),
    ],
)
def test_divisor_coefficients(points, expected):
    assert divisor_coefficients(points) == expected


def test_divisor_coefficients_rejects_origin():
    with pytest.raises(DomainError):
        divisor_coefficients([(0, 0)])


@pytest.mark.parametrize(
    "first, second",
    [
        ([(0, 1), (1, 1)], [(2, 1)]),
        ([(0, 1), (1, 1)], [(1, 1), (3, 1)]),
        ([(1, 0)], [(1, 0), (5, 1)]),
        ([(1, 0), (2, 1)], [(-1, 1)]),
    ],
)
def test_translation_invariance(first, second):
    def shifted(points):
        # z -> z + 1 moves the root alpha / beta to (alpha + beta) / beta
        return [(alpha + beta, beta) for alpha, beta in points]

    before = divisor_pair_check(divisor_coefficients(first), divisor_coefficients(second))
    after = divisor_pair_check(divisor_coefficients(shifted(first)), divisor_coefficients(shifted(second)))
    assert before == after
    assert before == (not set(first) & set(second))


def test_window_examples():
    rows = window_examples()
    assert [row["degree"] for row in rows] == [-2, -1, 0, 1, 2]
    assert [row["inside"] for row in rows] == [False, False, True, True, False]
    assert rows[0]["vol"] == "1" and rows[0]["c"] == "1/2"
