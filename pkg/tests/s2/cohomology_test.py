import itertools

import pytest

from vortexlab.errors import DomainError
from vortexlab.s2 import EquivClass, ClassB, ring_mul, tangent_class, pair_with_B


a, b = EquivClass.a(), EquivClass.b()


def test_cubic_relation():
    assert b * b * b == -(a * b * b)
    assert ring_mul(b, b ** 2).coeffs == {(1, 2): -1}
    assert (b ** 4).coeffs == {(2, 2): 1}


def test_square_of_a_plus_b():
    assert ((a + b) ** 2).coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_reduced_form():
    u = EquivClass({(0, 5): 3, (1, 0): 1, (2, 2): -3})
    # b^5 = a^3 b^2 with the sign (-1)^3
    assert u.coeffs == {(1, 0): 1, (2, 2): -3, (3, 2): -3}
    assert u.normalized


def test_ring_axioms():
    samples = [a, b, a + b, a - 2 * b, b ** 2 + 3, EquivClass.one(), EquivClass.zero(), 2 * a * b - b ** 2]
    for u, v, w in itertools.product(samples, repeat=3):
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert u * v == v * u


def test_integers_and_zero():
    assert EquivClass.one() == 1
    assert (a - a).is_zero
    assert 1 - EquivClass.one() == 0
    assert repr(EquivClass.zero()) == "EquivClass(0)"
    assert EquivClass.zero() != a


def test_negative_exponent():
    with pytest.raises(DomainError):
        EquivClass({(-1, 0): 1})


def test_tangent_class():
    assert tangent_class() == a - 2 * b
    assert tangent_class().degrees() == {2}


@pytest.mark.parametrize(
    "u, B, expected",
    [
        (tangent_class(), ClassB(3, 1), 4),
        (tangent_class(), ClassB(2, 5), 7),
        (b, ClassB(3, 1), -1),
        (a, ClassB(3, 1), 2),
        (a + b, ClassB(7, 2), 3),
        (EquivClass.zero(), ClassB(4, 1), 0),
    ],
)
def test_pairing(u, B, expected):
    assert pair_with_B(u, B) == expected


@pytest.mark.parametrize("p, q", [(1, 2), (5, 3), (10, 1)])
def test_tangent_pairing_is_p_plus_q(p, q):
    assert pair_with_B(tangent_class(), ClassB(p, q)) == p + q


@pytest.mark.parametrize("u", [a * b, EquivClass.one(), a + b ** 2])
def test_pairing_needs_degree_two(u):
    with pytest.raises(DomainError):
        pair_with_B(u, ClassB(3, 1))


@pytest.mark.parametrize("p, q", [(-1, 2), (2, -1), (1.5, 1)])
def test_invalid_class(p, q):
    with pytest.raises(DomainError):
        ClassB(p, q)


@pytest.mark.parametrize("p, q", [(3, 0), (2, 2), (0, 0)])
def test_not_simple(p, q):
    with pytest.raises(DomainError):
        ClassB(p, q).require_simple()
