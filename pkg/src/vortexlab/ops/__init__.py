from .helper import (
    fftfreq,
    lattice_laplacian_symbol,
    wrap_angle,
    complex_multiply,
    complex_abs2,
    phase_factor,
    shift_sites,
    unshift_sites,
)
from .fft import cast_to_complex, fft2, ifft2, spectral_filter
