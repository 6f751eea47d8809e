"""
Enumerators of split bundles and weight data for checking the closed forms against the oracle.

"""

from itertools import combinations_with_replacement, product

import numpy as np

from .weight_data import Group, Summand, SplitBundle, WeightData

CIRCLE_WEIGHTS = (-1, 0, 1)
DEFAULT_MODULI = tuple(range(2, 8))


def cyclic_groups(moduli=DEFAULT_MODULI):
    for m in moduli:
        for l in range(1, m):
            yield Group.cyclic(m, l)


def summand_types(group: Group, max_degree: int):
    """Every summand with fiber weights in the almost-free range and `|degree| <= max_degree`."""
    if group.is_circle:
        return [Summand(a - b, a, b) for a, b in product(CIRCLE_WEIGHTS, repeat=2) if abs(a - b) <= max_degree]
    l, m = group.l, group.m
    types = []
    for a, b in product((-l, 0, l), repeat=2):
        for degree in range(-max_degree, max_degree + 1):
            if (degree - a + b) % m == 0:
                types.append(Summand(degree, a, b))
    return types


def sweep_split_bundles(max_rank=5, max_degree=6, moduli=DEFAULT_MODULI, seed=0, samples=100):
    """
    Split bundles for the oracle comparison.

    Yields every circle bundle with fiber weights in `{-1, 0, 1}` and rank up to `max_rank`; for
    every cyclic group `(m, l)` with `m` in `moduli`, every bundle of rank at most 2 built from
    consistent summands with `|degree| <= max_degree`, followed by `samples` random bundles of
    rank `3..max_rank` drawn with `seed`.

    """

    types = summand_types(Group.circle(), max_degree)
    for rank in range(1, max_rank + 1):
        for summands in combinations_with_replacement(types, rank):
            yield SplitBundle(summands, Group.circle())

    rng = np.random.default_rng(seed)
    for group in cyclic_groups(moduli):
        types = summand_types(group, max_degree)
        for rank in (1, 2):
            for summands in combinations_with_replacement(types, rank):
                yield SplitBundle(summands, group)
        if max_rank < 3:
            continue
        for _ in range(samples):
            rank = int(rng.integers(3, max_rank + 1))
            picks = rng.integers(0, len(types), size=rank)
            yield SplitBundle(tuple(types[int(k)] for k in picks), group)


def _compositions(rank):
    for p in range(rank + 1):
        for z in range(rank - p + 1):
            yield p, z, rank - p - z


def sweep_weight_data(max_rank=5, max_degree=6, moduli=DEFAULT_MODULI):
    """
    All consistent weight data up to `max_rank`.

    Circle data take their degree from the counts; cyclic data range over the degrees in
    `[-max_degree, max_degree]` that some split bundle realizes.

    """

    for rank in range(1, max_rank + 1):
        for (pp, zp, np_), (pm, zm, nm) in product(_compositions(rank), repeat=2):
            yield WeightData(rank, pp + nm - pm - np_, pp, zp, np_, pm, zm, nm, Group.circle())

    for group in cyclic_groups(moduli):
        m, l = group.m, group.l
        for rank in range(1, max_rank + 1):
            for (pp, zp, np_), (pm, zm, nm) in product(_compositions(rank), repeat=2):
                base = l * (pp - np_) - l * (pm - nm)
                for deg in range(-max_degree, max_degree + 1):
                    if (deg - base) % m == 0:
                        yield WeightData(rank, deg, pp, zp, np_, pm, zm, nm, group)
