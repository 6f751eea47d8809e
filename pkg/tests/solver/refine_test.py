import math

import numpy as np
import pytest

from vortexlab.lattice import (
    TorusLattice,
    LinkField,
    HiggsField,
    background_connection,
    equation_residuals,
    integrated_obstruction,
)
from vortexlab.solver import (
    initial_fields,
    pack_fields,
    unpack_fields,
    equation_vector,
    jacobian_sparsity,
    refine_solution,
)


def noisy_fields(n, weights, degree=1, seed=0):
    rng = np.random.default_rng(seed)
    lattice = TorusLattice(n)
    background = background_connection(degree, lattice)
    link = LinkField(background.angles_x + 0.1 * rng.normal(size=(n, n)), background.angles_y + 0.1 * rng.normal(size=(n, n)), degree)
    shape = (n, n, len(weights))
    higgs = HiggsField(rng.normal(size=shape), rng.normal(size=shape), weights)
    return lattice, link, higgs


def test_pack_layout():
    lattice, link, higgs = noisy_fields(4, (-1, 2))
    x = pack_fields(link, higgs)
    assert x.shape == (2 * 16 + 2 * 32,)
    unpacked_link, unpacked_higgs = unpack_fields(x, 4, higgs.weights, link.degree)
    assert np.array_equal(unpacked_link.angles_y, link.angles_y)
    assert np.array_equal(unpacked_higgs.imag, higgs.imag)
    assert unpacked_link.degree == 1 and unpacked_higgs.weights == (-1, 2)


def test_sparsity_covers_jacobian():
    n, weights, h = 4, (-1, 2), 1e-6
    lattice, link, higgs = noisy_fields(n, weights, seed=3)
    x = pack_fields(link, higgs)

    def residual(y):
        return equation_vector(*unpack_fields(y, n, weights, 1), 0.7, lattice)

    columns = []
    for k in range(x.size):
        step = np.zeros_like(x)
        step[k] = h
        columns.append((residual(x + step) - residual(x - step)) / (2 * h))
    jacobian = np.stack(columns, axis=1)

    pattern = jacobian_sparsity(n, len(weights)).toarray()
    assert pattern.shape == jacobian.shape
    outside = np.abs(jacobian[pattern == 0])
    assert outside.size == 0 or outside.max() < 1e-6, f"Jacobian entry {outside.max():.3e} outside the pattern"


def test_vacuum_is_refined():
    n, tau = 8, 64.0
    rng = np.random.default_rng(1)
    values = math.sqrt(tau) * (1 + 0.05 * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))))
    lattice, link, higgs = TorusLattice(n), LinkField.zeros(n), HiggsField.from_complex(values, (1,))
    assert max(equation_residuals(link, higgs, -tau / 2, lattice)) > 1

    link, higgs, used = refine_solution(link, higgs, -tau / 2, lattice, tol=1e-8)
    assert used > 0
    assert max(equation_residuals(link, higgs, -tau / 2, lattice)) < 1e-8


def test_converged_start_is_kept():
    lattice = TorusLattice(8)
    link, higgs = LinkField.zeros(8), HiggsField.from_complex(np.full((8, 8), 2.0), (1,))
    refined_link, refined_higgs, used = refine_solution(link, higgs, -2.0, lattice, tol=1e-10)
    assert used == 0
    assert refined_link is link and refined_higgs is higgs


def test_obstruction_is_never_undercut():
    lattice = TorusLattice(8)
    link, higgs = initial_fields(1, lattice, weights=(-1,), tau=1.0, seed=2)
    start = max(equation_residuals(link, higgs, 0.0, lattice))
    link, higgs, _ = refine_solution(link, higgs, 0.0, lattice, tol=1e-8, rounds=3)
    _, residual_eq2 = equation_residuals(link, higgs, 0.0, lattice)
    assert residual_eq2 >= integrated_obstruction(link, higgs, 0.0, lattice) - 1e-12
    assert max(equation_residuals(link, higgs, 0.0, lattice)) <= start


@pytest.mark.parametrize("rounds, evaluations", [(1, 1), (2, 3)])
def test_evaluation_budget(rounds, evaluations):
    lattice, link, higgs = noisy_fields(4, (1,), degree=0, seed=5)
    _, _, used = refine_solution(link, higgs, -1.0, lattice, tol=1e-14, rounds=rounds, evaluations=evaluations)
    assert 0 < used <= rounds * evaluations
