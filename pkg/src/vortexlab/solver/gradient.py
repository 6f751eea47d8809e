import logging

import numpy as np

from ..lattice import (
    ymh_energy,
    TorusLattice,
    LinkField,
    HiggsField,
    check_shapes,
    central_value,
    plaquette_angle,
    moment_map_linear,
)
from ..lattice.geometry import transported_neighbour
from ..ops import wrap_angle, phase_factor, complex_multiply, unshift_sites

logger = logging.getLogger(__name__)


def _edge_terms(link, higgs, axis):
    """Link and Higgs gradient of `sum |exp(i w theta) Phi(next) - Phi|**2` along one axis."""
    w = higgs.weight_tensor()
    angles = link.angles_x if axis == 0 else link.angles_y
    y_real, y_imag = transported_neighbour(link, higgs, axis)

    # d/dtheta |Y - Phi|^2 = 2 w Im(Y conj(Phi))
    cross = y_imag * higgs.real - y_real * higgs.imag
    link_grad = np.sum(2 * w * cross, axis=-1)

    # exp(-i w theta) Phi at the previous site
    back = complex_multiply(phase_factor(-angles[..., None] * w), higgs.values)
    z_real = unshift_sites(back[0], axis=axis)
    z_imag = unshift_sites(back[1], axis=axis)

    higgs_real = 4 * higgs.real - 2 * y_real - 2 * z_real
    higgs_imag = 4 * higgs.imag - 2 * y_imag - 2 * z_imag
    return link_grad, (higgs_real, higgs_imag)


def ymh_gradient(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice):
    """
    Exact gradient of the lattice energy `ymh_energy`.

    Parameters
    ----------
    link : LinkField
    higgs : HiggsField
    c : float | CentralParam
    lattice : TorusLattice

    Returns
    -------
    link_grad : (numpy.ndarray, numpy.ndarray)
        Partial derivatives with respect to `angles_x` and `angles_y`.
    higgs_grad : (numpy.ndarray, numpy.ndarray)
        Partial derivatives with respect to the real and imaginary parts of every Higgs entry.

    Notes
    -----
    The plaquette wrap is locally the identity, so the curvature term contributes
    `q = 2 wrap(P) / h**2` to the four edges of each plaquette with their orientation signs.
    The gradient is with respect to the Euclidean coordinates of the arrays; the L2 metric of the
    continuum differs by a factor `h**2` on the Higgs part.

    """

    check_shapes(lattice, link, higgs)
    t = central_value(c)
    h2 = lattice.cell_area

    q = 2 * wrap_angle(plaquette_angle(link)) / h2
    grad_x, (gx_real, gx_imag) = _edge_terms(link, higgs, axis=0)
    grad_y, (gy_real, gy_imag) = _edge_terms(link, higgs, axis=1)

    grad_x = grad_x + q - unshift_sites(q, axis=1)
    grad_y = grad_y + unshift_sites(q, axis=0) - q

    m = moment_map_linear(higgs)[..., None]
    potential = -2 * h2 * higgs.weight_tensor() * (m - t)
    grad_real = gx_real + gy_real + potential * higgs.real
    grad_imag = gx_imag + gy_imag + potential * higgs.imag
    return (grad_x, grad_y), (grad_real, grad_imag)


def _perturbed_energy(arrays, which, index, delta, weights, degree, t, lattice):
    shifted = [a.copy() for a in arrays]
    shifted[which][index] += delta
    link = LinkField(shifted[0], shifted[1], degree)
    higgs = HiggsField(shifted[2], shifted[3], weights)
    return ymh_energy(link, higgs, t, lattice).total


def finite_difference_check(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice, samples=100, eps=1e-5, seed=0, floor=1.0):
    """
    Compare `ymh_gradient` with central finite differences on randomly drawn coordinates.

    Parameters
    ----------
    link, higgs : LinkField, HiggsField
        Configuration to differentiate at.
    c : float | CentralParam
        Central parameter.
    lattice : TorusLattice
        Grid.
    samples : int, optional
        Number of coordinates. Defaults to `100`.
    eps : float, optional
        Difference step. Defaults to `1e-5`.
    seed : int, optional
        Seed of the coordinate draw. Defaults to `0`.
    floor : float, optional
        Errors are relative to `max(|g|, floor)`. Defaults to `1.0`.

    Returns
    -------
    error : float
        Largest relative deviation over the sampled coordinates.

    """

    t = central_value(c)
    arrays = [
        np.array(x, dtype=np.float64)
        for x in (link.angles_x, link.angles_y, higgs.real, higgs.imag)
    ]
    (gx, gy), (g_real, g_imag) = ymh_gradient(link, higgs, t, lattice)
    gradients = [gx, gy, g_real, g_imag]

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        which = int(rng.integers(0, 4))
        index = tuple(int(rng.integers(0, size)) for size in arrays[which].shape)
        plus = _perturbed_energy(arrays, which, index, eps, higgs.weights, link.degree, t, lattice)
        minus = _perturbed_energy(arrays, which, index, -eps, higgs.weights, link.degree, t, lattice)
        numeric = (plus - minus) / (2 * eps)
        analytic = float(gradients[which][index])
        worst = max(worst, abs(numeric - analytic) / max(abs(analytic), floor))
    logger.debug("finite-difference check on %d coordinates: worst relative error %.3e", samples, worst)
    return worst
