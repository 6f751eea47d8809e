from math import pi
from typing import Sequence, Tuple

import numpy as np

from .fields import TorusLattice, LinkField, HiggsField


DEFAULT_MODES = ((1, 2), (1, 3), (2, 3))


def smooth_fields(
    n: int,
    modes: Sequence[Tuple[int, int]] = DEFAULT_MODES,
    link_amplitude: float = 0.1,
    weights: Sequence[int] = (1,),
    side_length: float = 1.0,
    seed: int = 0,
):
    """
    Sample fixed smooth degree-0 fields at resolution `n`.

    The Higgs field is a random combination of the Fourier `modes` and the link angles are `h`
    times a smooth periodic 1-form evaluated at the edge midpoints. The random amplitudes depend
    on `seed` only, so the same continuum fields are sampled at every resolution.

    Parameters
    ----------
    n : int
        Sites per side.
    modes : sequence of (int, int), optional
        Wave numbers `(kx, ky)` of the Higgs field. Defaults to `((1, 2), (1, 3), (2, 3))`.
    link_amplitude : float, optional
        Amplitude of the connection 1-form. Defaults to `0.1`.
    weights : sequence of int, optional
        Higgs weights. Defaults to `(1,)`.
    side_length : float, optional
        Side of the torus. Defaults to `1.0`.
    seed : int, optional
        Seed of the amplitudes. Defaults to `0`.

    Returns
    -------
    lattice, link, higgs : (TorusLattice, LinkField, HiggsField)

    """

    lattice = TorusLattice(n, side_length)
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=(len(weights), len(modes), 2)) @ np.array([1.0, 1.0j])
    link_phases = rng.uniform(0.0, 2 * pi, size=4)

    h = lattice.spacing
    k = 2 * pi / side_length
    grid = np.arange(n) * h
    x, y = np.meshgrid(grid, grid, indexing="ij")

    values = np.zeros((n, n, len(weights)), dtype=np.complex128)
    for component in range(len(weights)):
        for (kx, ky), amplitude in zip(modes, amplitudes[component]):
            values[..., component] += amplitude * np.exp(1j * k * (kx * x + ky * y))

    def one_form(x, y):
        a_x = np.cos(k * y + link_phases[0]) + np.sin(k * (x + 2 * y) + link_phases[1])
        a_y = np.sin(k * x + link_phases[2]) + np.cos(k * (2 * x + y) + link_phases[3])
        return link_amplitude * a_x, link_amplitude * a_y

    a_x, _ = one_form(x + h / 2, y)
    _, a_y = one_form(x, y + h / 2)
    link = LinkField(h * a_x, h * a_y, 0)
    return lattice, link, HiggsField.from_complex(values, weights)
