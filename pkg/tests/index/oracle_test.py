import pytest

from vortexlab.errors import InconsistentWeightsError
from vortexlab.index import (
    Group,
    Summand,
    SplitBundle,
    index_s1,
    index_cyclic,
    index_oracle,
    circle_cohomology_weights,
    sweep_split_bundles,
    summand_types,
    cyclic_groups,
)


@pytest.mark.parametrize(
    "summand, h0, h1",
    [
        (Summand(0, 0, 0), [0], []),
        (Summand(2, 1, -1), [1, 0, -1], []),
        (Summand(1, 3, 2), [3, 2], []),
        (Summand(-1, 0, 1), [], []),
        (Summand(-3, -1, 2), [], [0, 1]),
    ],
)
def test_circle_cohomology_weights(summand, h0, h1):
    assert circle_cohomology_weights(summand) == (h0, h1)


def test_group_mismatch():
    bundle = SplitBundle(((0, 0, 0),))
    with pytest.raises(InconsistentWeightsError):
        index_oracle(bundle, Group.cyclic(2, 1))
    assert index_oracle(bundle, Group.circle()) == 1


def test_summand_types_are_consistent():
    for group in [Group.circle(), *cyclic_groups((2, 3, 6))]:
        for summand in summand_types(group, 6):
            SplitBundle((summand,), group)


def test_closed_forms_match_oracle():
    cases = 0
    for bundle in sweep_split_bundles():
        data = bundle.weight_data()
        closed = index_s1(data) if data.group.is_circle else index_cyclic(data)
        assert closed == index_oracle(bundle), f"Closed form and oracle differ on {bundle}"
        cases += 1
    assert cases >= 10_000


def test_degree_identity():
    for bundle in sweep_split_bundles(moduli=()):
        data = bundle.weight_data()
        assert bundle.degree == data.Pp + data.Nm - data.Pm - data.Np
