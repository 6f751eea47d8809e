"""
Yang-Mills-Higgs energy on the lattice and the pieces of its holomorphic rewriting.

All integrals are Riemann sums with cell weight `h**2`.

"""

from math import pi
from typing import NamedTuple

import numpy as np

from ..ops import complex_abs2
from .fields import TorusLattice, LinkField, HiggsField, check_shapes, central_value
from .geometry import plaquette_curvature, covariant_derivative, moment_map_linear, complex_derivatives


class EnergyBreakdown(NamedTuple):
    total: float
    curvature: float
    kinetic: float
    potential: float

    def terms(self) -> dict:
        return {"curvature": self.curvature, "kinetic": self.kinetic, "potential": self.potential}


def _integrate(x, lattice):
    return float(np.sum(x)) * lattice.cell_area


def ymh_energy(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> EnergyBreakdown:
    """
    Lattice Yang-Mills-Higgs functional.

    Parameters
    ----------
    link : LinkField
    higgs : HiggsField
    c : float | CentralParam
        Central parameter `t` of `c = i t`.
    lattice : TorusLattice

    Returns
    -------
    energy : EnergyBreakdown
        Total and the three terms `||f||**2`, `||d_A Phi||**2` and `||m - t||**2`.

    """

    check_shapes(lattice, link, higgs)
    t = central_value(c)
    f = plaquette_curvature(link, lattice)
    (ar, ai), (br, bi) = covariant_derivative(link, higgs, lattice)
    m = moment_map_linear(higgs)

    curvature = _integrate(np.square(f), lattice)
    kinetic = _integrate(complex_abs2((ar, ai)) + complex_abs2((br, bi)), lattice)
    potential = _integrate(np.square(m - t), lattice)
    return EnergyBreakdown(curvature + kinetic + potential, curvature, kinetic, potential)


def holomorphic_energy_split(link: LinkField, higgs: HiggsField, lattice: TorusLattice):
    """
    Return `(||del_A Phi||**2, ||dbar_A Phi||**2)`.

    The two numbers add up to `||d_A Phi||**2` up to round-off.

    """

    check_shapes(lattice, link, higgs)
    plus, minus = complex_derivatives(link, higgs, lattice)
    holomorphic = _integrate(complex_abs2(minus), lattice) / 2
    antiholomorphic = _integrate(complex_abs2(plus), lattice) / 2
    return holomorphic, antiholomorphic


def kahler_term(link: LinkField, higgs: HiggsField, lattice: TorusLattice) -> float:
    """
    Residual `||del||**2 - ||dbar||**2 - 2 int f m`.

    It vanishes in the continuum, where it is the integral of an exact form. On the lattice it is
    the whole discrepancy of the energy identity.

    """

    holomorphic, antiholomorphic = holomorphic_energy_split(link, higgs, lattice)
    f = plaquette_curvature(link, lattice)
    m = moment_map_linear(higgs)
    return holomorphic - antiholomorphic - 2 * _integrate(f * m, lattice)


def topological_term(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> float:
    """`2 t int f`, the energy of an exact solution."""
    check_shapes(lattice, link, higgs)
    return 2 * central_value(c) * _integrate(plaquette_curvature(link, lattice), lattice)


def energy_identity_defect(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> float:
    """
    Failure of the energy identity on the lattice.

    Parameters
    ----------
    link : LinkField
    higgs : HiggsField
    c : float | CentralParam
    lattice : TorusLattice

    Returns
    -------
    defect : float
        `|YMH - (||f + m - t||**2 + 2 ||dbar||**2 + 2 t int f)|`, which equals `|kahler_term|`.

    Notes
    -----
    For a first-order scheme the defect decays linearly under refinement of smooth data.

    """

    t = central_value(c)
    energy = ymh_energy(link, higgs, t, lattice).total
    _, antiholomorphic = holomorphic_energy_split(link, higgs, lattice)
    f = plaquette_curvature(link, lattice)
    m = moment_map_linear(higgs)
    balance = _integrate(np.square(f + m - t), lattice)
    return abs(energy - (balance + 2 * antiholomorphic + topological_term(link, higgs, t, lattice)))


def bogomolov_value(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> float:
    """
    Topological lower bound `t int f + K / 2` with `K` the Kahler term.

    Half the energy of any configuration is at least this number, with equality exactly on
    solutions of both equations.

    """

    t = central_value(c)
    return topological_term(link, higgs, t, lattice) / 2 + kahler_term(link, higgs, lattice) / 2


def equation_residuals(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice):
    """
    Sup-norms of both equations.

    Returns
    -------
    residual_eq1, residual_eq2 : (float, float)
        `max |dbar_A Phi|` (pointwise norm over components) and `max |f + m - t|`.

    """

    check_shapes(lattice, link, higgs)
    t = central_value(c)
    real, imag = complex_derivatives(link, higgs, lattice)[0]
    pointwise = np.sqrt(np.sum(np.square(real) + np.square(imag), axis=-1)) / 2
    balance = plaquette_curvature(link, lattice) + moment_map_linear(higgs) - t
    return float(np.max(pointwise)), float(np.max(np.abs(balance)))


def integrated_obstruction(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> float:
    """
    `|2 pi d / vol + mean(m) - t|`, a lower bound for the second residual.

    """

    check_shapes(lattice, link, higgs)
    t = central_value(c)
    mean_m = float(np.mean(moment_map_linear(higgs)))
    return abs(2 * pi * link.degree / lattice.volume + mean_m - t)
