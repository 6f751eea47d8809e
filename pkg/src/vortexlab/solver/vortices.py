from math import pi

import numpy as np
from scipy import ndimage

from ..lattice import TorusLattice, LinkField, HiggsField, check_shapes, plaquette_angle
from ..lattice.geometry import transported_neighbour
from ..ops import wrap_angle


def higgs_modulus(higgs: HiggsField) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(higgs.to_complex()) ** 2, axis=-1))


def count_vortices(higgs: HiggsField, relative_threshold: float = 0.1) -> int:
    """
    Number of zero clusters of `|Phi|`.

    Sites with `|Phi| < relative_threshold * median(|Phi|)` are grouped by 4-adjacency on the
    periodic grid.

    Parameters
    ----------
    higgs : HiggsField
    relative_threshold : float, optional
        Defaults to `0.1`.

    Returns
    -------
    count : int

    """

    modulus = higgs_modulus(higgs)
    median = np.median(modulus)
    if median == 0:
        return 0

    labels, count = ndimage.label(modulus < relative_threshold * median)
    if count == 0:
        return 0

    parent = list(range(count + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    # glue clusters across the periodic boundary
    for first, last in ((labels[0, :], labels[-1, :]), (labels[:, 0], labels[:, -1])):
        for a, b in zip(first, last):
            if a and b:
                parent[find(a)] = find(b)

    return len({find(label) for label in range(1, count + 1)})


def vortex_winding(link: LinkField, higgs: HiggsField, lattice: TorusLattice) -> np.ndarray:
    """
    Integer winding of the gauge-covariant phase around every plaquette.

    Uses the first component that does not vanish identically. The windings add up to `-w d`.

    Returns
    -------
    winding : numpy.ndarray
        `(n, n)` integer array.

    """

    check_shapes(lattice, link, higgs)
    values = higgs.to_complex()
    nonzero = [j for j in range(higgs.rank) if np.any(values[..., j] != 0)]
    if not nonzero:
        return np.zeros((lattice.n, lattice.n), dtype=int)
    j = nonzero[0]
    w = higgs.weights[j]

    phases = []
    for axis in (0, 1):
        moved_real, moved_imag = transported_neighbour(link, higgs, axis)
        moved = moved_real[..., j] + 1j * moved_imag[..., j]
        phases.append(np.angle(moved * np.conj(values[..., j])))
    dx, dy = phases

    circulation = dx + np.roll(dy, -1, axis=0) - np.roll(dx, -1, axis=1) - dy
    flux = wrap_angle(plaquette_angle(link))
    return np.rint((circulation - w * flux) / (2 * pi)).astype(int)
