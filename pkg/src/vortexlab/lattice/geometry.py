"""
Local lattice geometry: plaquettes, covariant differences and the linear moment map.

"""

from math import pi

import numpy as np

from ..config import FLOATX
from ..errors import BranchSafetyError
from ..ops import wrap_angle, shift_sites, phase_factor, complex_multiply
from .fields import TorusLattice, LinkField, HiggsField, check_shapes


def plaquette_angle(link: LinkField):
    """Counter-clockwise sum of edge angles around every plaquette, unwrapped."""
    return (
        link.angles_x
        + shift_sites(link.angles_y, axis=0)
        - shift_sites(link.angles_x, axis=1)
        - link.angles_y
    )


def plaquette_curvature(link: LinkField, lattice: TorusLattice):
    """
    Curvature scalar `f` on every plaquette.

    Parameters
    ----------
    link : LinkField
        Lattice connection.
    lattice : TorusLattice
        Grid the connection lives on.

    Returns
    -------
    f : numpy.ndarray
        `(n, n)` array `wrap(P) / h**2`, where `P` is the plaquette angle and `wrap` maps it to `(-pi, pi]`.

    Raises
    ------
    ShapeMismatchError
        If the link field does not live on `lattice`.

    Examples
    --------
    >>> lattice = TorusLattice(16)
    >>> f = plaquette_curvature(background_connection(1, lattice), lattice)
    >>> float(np.max(f)), float(np.min(f))  # 2 pi / volume everywhere
    (6.283185307179..., 6.283185307179...)

    """

    check_shapes(lattice, link)
    return wrap_angle(plaquette_angle(link)) / lattice.cell_area


def total_curvature(link: LinkField, lattice: TorusLattice) -> float:
    check_shapes(lattice, link)
    return float(np.sum(wrap_angle(plaquette_angle(link))))


def background_connection(degree: int, lattice: TorusLattice) -> LinkField:
    """
    Uniform-curvature connection of the given degree.

    The y-angles grow linearly in x and a single transition row of x-angles closes the bundle,
    so every wrapped plaquette angle equals `2 pi d / n**2`.

    Parameters
    ----------
    degree : int
        Degree `d` of the bundle.
    lattice : TorusLattice
        Grid.

    Returns
    -------
    link : LinkField

    Raises
    ------
    BranchSafetyError
        If `|d| > n / 2`.

    """

    n = lattice.n
    if abs(degree) > n / 2:
        raise BranchSafetyError(
            f"Degree {degree} is too large for n={n}: plaquette angles leave the principal branch unless |d| <= n/2."
        )

    index = np.arange(n, dtype=FLOATX)
    i, j = np.meshgrid(index, index, indexing="ij")
    angles_y = 2 * pi * degree * i / n ** 2
    transition = (i == n - 1).astype(FLOATX)
    angles_x = -2 * pi * degree * j / n * transition
    return LinkField(angles_x, angles_y, int(degree))


def transported_neighbour(link: LinkField, higgs: HiggsField, axis: int):
    """`exp(i w theta_e) Phi(s + e)` for the edge direction `axis` (0 for x, 1 for y)."""
    angles = link.angles_x if axis == 0 else link.angles_y
    phase = phase_factor(angles[..., None] * higgs.weight_tensor())
    neighbour = (shift_sites(higgs.real, axis=axis), shift_sites(higgs.imag, axis=axis))
    return complex_multiply(phase, neighbour)


def covariant_derivative(link: LinkField, higgs: HiggsField, lattice: TorusLattice):
    """
    Forward covariant differences `(D_x Phi, D_y Phi)`.

    Parameters
    ----------
    link : LinkField
    higgs : HiggsField
    lattice : TorusLattice

    Returns
    -------
    dx, dy : tuple of (numpy.ndarray, numpy.ndarray)
        `(real, imag)` parts of `(exp(i w theta) Phi(next) - Phi(here)) / h` along x and y, each of shape `(n, n, r)`.

    """

    check_shapes(lattice, link, higgs)
    h = lattice.spacing
    derivatives = []
    for axis in (0, 1):
        moved_real, moved_imag = transported_neighbour(link, higgs, axis)
        derivatives.append(((moved_real - higgs.real) / h, (moved_imag - higgs.imag) / h))
    return tuple(derivatives)


def complex_derivatives(link, higgs, lattice):
    (ar, ai), (br, bi) = covariant_derivative(link, higgs, lattice)
    # D_x + i D_y and D_x - i D_y
    return (ar - bi, ai + br), (ar + bi, ai - br)


def dbar(link: LinkField, higgs: HiggsField, lattice: TorusLattice):
    """Antiholomorphic part `(D_x + i D_y) / 2` as a `(real, imag)` tuple."""
    (pr, pi_), _ = complex_derivatives(link, higgs, lattice)
    return pr / 2, pi_ / 2


def del_holomorphic(link: LinkField, higgs: HiggsField, lattice: TorusLattice):
    """Holomorphic part `(D_x - i D_y) / 2` as a `(real, imag)` tuple."""
    _, (mr, mi) = complex_derivatives(link, higgs, lattice)
    return mr / 2, mi / 2


def moment_map_linear(higgs: HiggsField):
    """
    Real scalar `m` of the moment map `mu = i m` for the diagonal U(1) action.

    Returns
    -------
    m : numpy.ndarray
        `(n, n)` array `-1/2 sum_j w_j |Phi_j|**2`.

    """

    density = np.square(higgs.real) + np.square(higgs.imag)
    return -0.5 * np.sum(higgs.weight_tensor() * density, axis=-1)
