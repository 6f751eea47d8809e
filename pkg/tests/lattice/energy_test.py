from math import pi

import numpy as np
import pytest

from vortexlab.lattice import (
    TorusLattice,
    LinkField,
    HiggsField,
    background_connection,
    gauge_transform,
    ymh_energy,
    kahler_term,
    topological_term,
    energy_identity_defect,
    bogomolov_value,
    equation_residuals,
    integrated_obstruction,
    holomorphic_energy_split,
    smooth_fields,
)


def random_fields(n=8, weights=(1, -1), seed=0, degree=0):
    rng = np.random.default_rng(seed)
    lattice = TorusLattice(n)
    background = background_connection(degree, lattice)
    link = LinkField(
        background.angles_x + rng.uniform(-0.3, 0.3, (n, n)),
        background.angles_y + rng.uniform(-0.3, 0.3, (n, n)),
        degree,
    )
    higgs = HiggsField(rng.normal(size=(n, n, len(weights))), rng.normal(size=(n, n, len(weights))), weights)
    return lattice, link, higgs


def test_zero_configuration():
    lattice = TorusLattice(8)
    energy = ymh_energy(LinkField.zeros(8), HiggsField.zeros(8, (1,)), 0.0, lattice)
    assert energy.total == 0 and energy.terms() == {"curvature": 0, "kinetic": 0, "potential": 0}


def test_vacuum_has_zero_energy():
    tau = 4.0
    lattice = TorusLattice(8)
    higgs = HiggsField.from_complex(np.full((8, 8), np.sqrt(tau)), (1,))
    energy = ymh_energy(LinkField.zeros(8), higgs, -tau / 2, lattice)
    assert energy.total == pytest.approx(0, abs=1e-24)
    assert energy_identity_defect(LinkField.zeros(8), higgs, -tau / 2, lattice) < 1e-12


def test_background_curvature_energy():
    lattice = TorusLattice(16)
    energy = ymh_energy(background_connection(1, lattice), HiggsField.zeros(16, (1,)), 0.0, lattice)
    assert energy.curvature == pytest.approx(4 * pi ** 2 / lattice.volume, rel=1e-12)
    assert energy.kinetic == 0 and energy.potential == 0


@pytest.mark.parametrize("c", [0.0, 1.3, -2.0])
def test_energy_identity_is_exact_with_kahler_term(c):
    lattice, link, higgs = random_fields(seed=1, degree=1)
    energy = ymh_energy(link, higgs, c, lattice).total
    defect = energy_identity_defect(link, higgs, c, lattice)
    assert defect == pytest.approx(abs(kahler_term(link, higgs, lattice)), rel=1e-9, abs=1e-9)
    # half the energy minus the bound is a sum of squares
    assert energy / 2 >= bogomolov_value(link, higgs, c, lattice) - 1e-9


def test_topological_term():
    lattice = TorusLattice(16)
    link = background_connection(2, lattice)
    assert topological_term(link, HiggsField.zeros(16, (1,)), 1.5, lattice) == pytest.approx(2 * 1.5 * 4 * pi)


def test_bogomolov_flat_vacuum():
    lattice = TorusLattice(8)
    higgs = HiggsField.from_complex(np.full((8, 8), 2.0), (1,))
    assert bogomolov_value(LinkField.zeros(8), higgs, -2.0, lattice) == pytest.approx(0, abs=1e-12)


def test_refinement_of_energy_identity():
    defects = []
    for n in (32, 64):
        lattice, link, higgs = smooth_fields(n)
        defects.append(energy_identity_defect(link, higgs, 0.3, lattice))
    assert defects[1] <= 0.7 * defects[0], f"Defect does not decay under refinement: {defects}"


def test_gauge_invariance_of_energies():
    lattice, link, higgs = random_fields(seed=2, weights=(1, 2), degree=1)
    gauge = np.random.default_rng(5).uniform(-pi, pi, (8, 8))
    moved_link, moved_higgs = gauge_transform(link, higgs, gauge)
    for quantity in (energy_identity_defect, bogomolov_value):
        assert quantity(moved_link, moved_higgs, 0.7, lattice) == pytest.approx(quantity(link, higgs, 0.7, lattice), abs=1e-10)
    assert ymh_energy(moved_link, moved_higgs, 0.7, lattice).total == pytest.approx(
        ymh_energy(link, higgs, 0.7, lattice).total, abs=1e-10
    )


def test_residuals_and_obstruction():
    tau = 2.0
    lattice = TorusLattice(8)
    higgs = HiggsField.from_complex(np.full((8, 8), np.sqrt(tau)), (1,))
    residual_eq1, residual_eq2 = equation_residuals(LinkField.zeros(8), higgs, -tau / 2, lattice)
    assert residual_eq1 == 0 and residual_eq2 == pytest.approx(0, abs=1e-14)

    link = background_connection(1, lattice)
    obstruction = integrated_obstruction(link, HiggsField.zeros(8, (1,)), 0.0, lattice)
    assert obstruction == pytest.approx(2 * pi)
    assert equation_residuals(link, HiggsField.zeros(8, (1,)), 0.0, lattice)[1] >= obstruction - 1e-12


def test_energy_split_matches_kinetic_term():
    lattice, link, higgs = random_fields(seed=3)
    holomorphic, antiholomorphic = holomorphic_energy_split(link, higgs, lattice)
    assert holomorphic + antiholomorphic == pytest.approx(ymh_energy(link, higgs, 0.0, lattice).kinetic, rel=1e-12)
