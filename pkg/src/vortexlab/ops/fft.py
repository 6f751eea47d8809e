from typing import Union, Tuple

import numpy as np

from ..errors import ShapeMismatchError


def cast_to_complex(x: Union[Tuple[np.ndarray, np.ndarray], np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(x, (tuple, list)):
        return tuple(np.asarray(part, dtype=np.float64) for part in x)
    else:
        x = np.asarray(x, dtype=np.float64)
        return x, np.zeros_like(x)


def _as_complex(x):
    real, imag = cast_to_complex(x)
    if real.shape != imag.shape:
        raise ShapeMismatchError(
            f"Real and imaginary parts must have the same shape, received {real.shape} and {imag.shape}."
        )
    return real + 1j * imag


def fft2(x):
    """
    2-D fast Fourier transform over the last two axes.

    Parameters
    ----------
    x : numpy.ndarray | tuple | list
        Real- or complex input. A complex input is a tuple or list of the real- and imaginary part `(x_real, x_imag)`.

    Returns
    -------
    y_real, y_imag : (numpy.ndarray, numpy.ndarray)
        Tuple of real- and imaginary part of FFT2(x).

    Examples
    --------
    >>> signal = np.array([[-2.0, 8.0], [6.0, 12.0]])
    >>> y_real, y_imag = fft2(signal)
    >>> y_real
    array([[ 24., -16.],
           [-12.,  -4.]])

    """

    y = np.fft.fft2(_as_complex(x))
    return y.real, y.imag


def ifft2(x):
    """
    2-D inverse fast Fourier transform over the last two axes.

    Parameters
    ----------
    x : numpy.ndarray | tuple | list
        Real- or complex input.

    Returns
    -------
    y_real, y_imag : (numpy.ndarray, numpy.ndarray)
        Tuple of real- and imaginary part of IFFT2(x).

    """

    y = np.fft.ifft2(_as_complex(x))
    return y.real, y.imag


def spectral_filter(x, multiplier):
    """
    Apply a real Fourier multiplier to a real field on a periodic grid.

    Parameters
    ----------
    x : numpy.ndarray
        Real input of shape `(n, n)` or `(n, n, r)`. The first two axes are the lattice axes.
    multiplier : numpy.ndarray
        Real symbol of shape `(n, n)` in `fftfreq` ordering. It must be even in `k`
        so that the output stays real.

    Returns
    -------
    y : numpy.ndarray
        Filtered field, same shape as `x`.

    """

    x = np.asarray(x, dtype=np.float64)
    multiplier = np.asarray(multiplier, dtype=np.float64)
    if x.ndim == 3:
        multiplier = multiplier[..., None]
    spectrum = np.fft.fft2(x, axes=(0, 1))
    return np.fft.ifft2(spectrum * multiplier, axes=(0, 1)).real
