"""
Array helpers for periodic lattices on float64 numpy arrays.

The lattice code does not go through `keras.ops`: its type promotion rounds float64 to float32
on every backend except TensorFlow.

"""

import numpy as np
from math import pi


def fftfreq(n, d=1.0, rad=False):
    """
    Wave numbers of a periodic grid with `n` sites and spacing `d`, in FFT order.

    Index `k` maps to `k` for `k < (n + 1) // 2` and to `k - n` otherwise, divided by `d * n`.

    Parameters
    ----------
    n : int
        Sites per side.
    d : scalar, optional
        Lattice spacing. Defaults to `1.0`.
    rad : bool, optional
        Multiply by `2 pi`, as the Laplacian symbol needs. Defaults to `False`.

    Returns
    -------
    f : numpy.ndarray
        float64 array of length `n`.

    Examples
    --------
    >>> fftfreq(8, d=0.1)
    array([ 0.  ,  1.25,  2.5 ,  3.75, -5.  , -3.75, -2.5 , -1.25])

    """

    fft_freqs = np.fft.fftfreq(n, d)

    if rad:
        fft_freqs *= (2 * pi)

    return fft_freqs


def lattice_laplacian_symbol(n, spacing):
    """
    Eigenvalues of the negative 5-point periodic Laplacian on an `n x n` grid.

    Parameters
    ----------
    n : int
        Sites per side.
    spacing : float
        Lattice spacing `h`.

    Returns
    -------
    lam : numpy.ndarray
        `(n, n)` array with `lam[i, j] = (4 / h**2) * (sin(kx h / 2)**2 + sin(ky h / 2)**2)`.

    """

    k = fftfreq(n, d=spacing, rad=True)
    s = np.square(np.sin(k * spacing / 2))
    return (4.0 / spacing ** 2) * (s[:, None] + s[None, :])


def wrap_angle(phase, period=2 * pi):
    """
    Map angles onto the principal branch `(-period/2, period/2]`.

    Unlike `numpy.unwrap`, which removes jumps along an axis, every entry is
    reduced independently to the nearest representative.

    Parameters
    ----------
    phase : numpy.ndarray
        Input array.
    period : float, optional
        Size of the range over which the input wraps. By default, it is
        `2*pi`.

    Returns
    -------
    out : numpy.ndarray
        Output array with entries in `(-period/2, period/2]`.

    Examples
    --------
    >>> from math import pi
    >>> wrap_angle(np.array([pi, -pi, 1.5 * pi]))
    array([ 3.14159265,  3.14159265, -1.57079633])

    """

    turns = np.ceil((phase - period / 2) / period)
    return phase - turns * period


def complex_multiply(x, y):
    """Product of two complex tensors given as `(real, imag)` tuples."""
    xr, xi = x
    yr, yi = y
    return xr * yr - xi * yi, xr * yi + xi * yr


def complex_abs2(x):
    xr, xi = x
    return np.square(xr) + np.square(xi)


def phase_factor(angle):
    """`exp(i * angle)` as a `(real, imag)` tuple."""
    return np.cos(angle), np.sin(angle)


def shift_sites(x, axis):
    """
    Value at the next site along `axis`, periodic: `out[i] = x[i + 1]`.

    """

    return np.roll(x, shift=-1, axis=axis)


def unshift_sites(x, axis):
    """Value at the previous site along `axis`, periodic: `out[i] = x[i - 1]`."""
    return np.roll(x, shift=1, axis=axis)
