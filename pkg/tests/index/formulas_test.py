import math

import pytest

from vortexlab.errors import DomainError, InconsistentWeightsError
from vortexlab.index import (
    Group,
    SplitBundle,
    WeightData,
    index_s1,
    index_cyclic,
    index_cyclic_fraction,
    roots_of_unity_sums,
    virtual_dimension,
    bubble_codim_check,
    sweep_weight_data,
)


@pytest.mark.parametrize(
    "summands, expected",
    [
        (((0, 0, 0),), 1),
        (((1, 1, 0),), 1),
        (((1, 0, -1),), 1),
        (((-2, -1, 1),), -1),
        (((2, 1, -1),), 1),
        (((0, 0, 0), (0, 1, 1)), 1),
    ],
)
def test_circle_index(summands, expected):
    assert index_s1(SplitBundle(summands).weight_data()) == expected


@pytest.mark.parametrize(
    "summands, group, expected",
    [
        (((0, 0, 0),), Group.cyclic(2, 1), 1),
        (((2, 0, 0),), Group.cyclic(2, 1), 2),
        (((-2, 0, 0),), Group.cyclic(2, 1), 0),
        (((1, 1, 0),), Group.cyclic(3, 1), 1),
    ],
)
def test_cyclic_index(summands, group, expected):
    assert index_cyclic(SplitBundle(summands, group).weight_data()) == expected


def test_wrong_group():
    circle = WeightData(1, 0, Zp=1, Zm=1)
    cyclic = WeightData(1, 0, Zp=1, Zm=1, group=Group.cyclic(2, 1))
    with pytest.raises(DomainError):
        index_cyclic(circle)
    with pytest.raises(DomainError):
        index_s1(cyclic)


def test_non_integral_cyclic_index():
    data = WeightData(1, 1, Zp=1, Zm=1, group=Group.cyclic(3, 1))
    assert index_cyclic_fraction(data).denominator == 3
    with pytest.raises(InconsistentWeightsError):
        index_cyclic(data)


@pytest.mark.parametrize("m", [2, 3, 7, 12, 50])
def test_roots_of_unity_sums(m):
    for w in range(1, m):
        first, second = roots_of_unity_sums(m, w)
        assert abs(first - (m - 1) / 2) < 1e-9
        assert abs(second - (-(m - 1) / 2 + w - 1)) < 1e-9


@pytest.mark.parametrize("m, w", [(1, 1), (4, 0), (4, 4)])
def test_roots_of_unity_domain(m, w):
    with pytest.raises(DomainError):
        roots_of_unity_sums(m, w)


def test_virtual_dimension():
    assert virtual_dimension(4, n=1, g=0, dim_k=1) == 4
    assert virtual_dimension(3, n=2, g=2, dim_k=1) == 2
    assert virtual_dimension(5, n=3, g=0, dim_k=3, c1_g_pairing=1) == 4


def test_bubble_bound_examples():
    # two copies of O(1) with weights (1, 0)
    assert bubble_codim_check(WeightData(2, 2, Pp=2, Zm=2))
    assert bubble_codim_check(WeightData(2, 1, Pp=2, Pm=1, Zm=1))


@pytest.mark.parametrize(
    "data",
    [
        WeightData(1, 0, Zp=1, Zm=1),
        WeightData(2, -1, Np=1, Zp=1, Zm=2),
        WeightData(1, 1, Pp=1, Zm=1),
    ],
)
def test_bubble_bound_domain(data):
    with pytest.raises(DomainError):
        bubble_codim_check(data)


def test_bubble_bound_base_data():
    data = WeightData(2, 2, Pp=2, Zm=2)
    with pytest.raises(DomainError):
        bubble_codim_check(data, {"deg": 3})
    assert bubble_codim_check(data, {"deg": 2, "rank": 2})


def test_bubble_bound_holds_on_sweep():
    checked = 0
    for data in sweep_weight_data():
        if data.deg >= 1 and data.moving >= 2:
            assert bubble_codim_check(data), f"Bound fails for {data.to_json()}"
            checked += 1
    assert checked >= 10_000
