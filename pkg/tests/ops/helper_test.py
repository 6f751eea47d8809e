from math import pi

import numpy as np
import pytest

from vortexlab.ops import fftfreq, lattice_laplacian_symbol, wrap_angle, complex_multiply, shift_sites, unshift_sites


def to_numpy(x):
    return np.asarray(x)


@pytest.mark.parametrize("n", [4, 7, 8, 33])
@pytest.mark.parametrize("d", [1.0, 0.1])
def test_fftfreq(n, d):
    assert np.allclose(to_numpy(fftfreq(n, d)), np.fft.fftfreq(n, d)), f"Frequencies deviate from numpy for n={n}, d={d}"
    assert np.allclose(to_numpy(fftfreq(n, d, rad=True)), 2 * pi * np.fft.fftfreq(n, d))


def test_wrap_angle_branch():
    x = np.array([pi, -pi, 1.5 * pi, -1.5 * pi, 0.3, 7 * pi])
    wrapped = to_numpy(wrap_angle(x))
    assert np.allclose(wrapped, [pi, pi, -0.5 * pi, 0.5 * pi, 0.3, pi])
    assert np.all(wrapped > -pi) and np.all(wrapped <= pi), f"Wrapped angles leave (-pi, pi]: {wrapped}"


def test_laplacian_symbol_matches_stencil():
    n, h = 8, 0.125
    lam = to_numpy(lattice_laplacian_symbol(n, h))
    k = 2 * pi * np.fft.fftfreq(n, h)
    x = np.arange(n) * h
    for a, b in [(1, 0), (2, 3), (4, 4)]:
        wave = np.cos(k[a] * x)[:, None] * np.cos(k[b] * x)[None, :]
        stencil = (4 * wave - sum(np.roll(wave, s, axis=ax) for s in (1, -1) for ax in (0, 1))) / h ** 2
        assert np.allclose(stencil, lam[a, b] * wave), f"Symbol is no eigenvalue of the 5-point Laplacian at mode {(a, b)}"
    assert lam[0, 0] == 0


def test_complex_multiply():
    x, y = 1.5 - 2j, -0.5 + 3j
    real, imag = complex_multiply((x.real, x.imag), (y.real, y.imag))
    assert complex(real, imag) == pytest.approx(x * y)


@pytest.mark.parametrize("axis", [0, 1])
def test_shifts_are_inverse(axis):
    x = np.arange(16, dtype=np.float64).reshape(4, 4)
    assert np.array_equal(to_numpy(unshift_sites(shift_sites(x, axis), axis)), to_numpy(x))
    assert to_numpy(shift_sites(x, axis))[0, 0] == (4.0 if axis == 0 else 1.0)
