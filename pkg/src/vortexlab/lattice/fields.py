import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..errors import DomainError, ShapeMismatchError, SchemaError
from ..config import FLOATX


@dataclass(frozen=True)
class TorusLattice:
    """
    Periodic `n x n` grid on the flat torus of side `side_length`.

    Parameters
    ----------
    n : int
        Sites per side, at least 4.
    side_length : float, optional
        Side of the torus. Defaults to `1.0`.

    """

    n: int
    side_length: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 4:
            raise DomainError(f"`n` must be an integer >= 4, received n={self.n}.")
        if not (self.side_length > 0 and math.isfinite(self.side_length)):
            raise DomainError(f"`side_length` must be positive and finite, received {self.side_length}.")

    @property
    def spacing(self) -> float:
        return self.side_length / self.n

    @property
    def volume(self) -> float:
        return self.side_length ** 2

    @property
    def cell_area(self) -> float:
        return self.spacing ** 2

    def coordinates(self, offset=(0.0, 0.0)):
        """Site coordinates `(x, y)` as two `(n, n)` arrays, shifted by `offset` in units of `h`."""
        h = self.spacing
        axis = np.arange(self.n, dtype=FLOATX)
        x = (axis + offset[0]) * h
        y = (axis + offset[1]) * h
        return np.meshgrid(x, y, indexing="ij")


@dataclass(frozen=True, eq=False)
class LinkField:
    """
    U(1) lattice connection given by its edge angles.

    Parameters
    ----------
    angles_x : numpy.ndarray
        `(n, n)` angles on the edges `(i, j) -> (i+1, j)`.
    angles_y : numpy.ndarray
        `(n, n)` angles on the edges `(i, j) -> (i, j+1)`.
    degree : int
        Degree of the underlying line bundle.

    """

    angles_x: object
    angles_y: object
    degree: int = 0

    def __post_init__(self):
        object.__setattr__(self, "angles_x", np.asarray(self.angles_x, dtype=FLOATX))
        object.__setattr__(self, "angles_y", np.asarray(self.angles_y, dtype=FLOATX))
        if tuple(self.angles_x.shape) != tuple(self.angles_y.shape) or len(self.angles_x.shape) != 2:
            raise ShapeMismatchError(
                f"Link angles must be two square arrays of equal shape, received {self.angles_x.shape} and {self.angles_y.shape}."
            )
        if self.angles_x.shape[0] != self.angles_x.shape[1]:
            raise ShapeMismatchError(f"Link angles must be square, received {self.angles_x.shape}.")

    @property
    def n(self) -> int:
        return int(self.angles_x.shape[0])

    @classmethod
    def zeros(cls, n: int, degree: int = 0):
        return cls(np.zeros((n, n), dtype=FLOATX), np.zeros((n, n), dtype=FLOATX), degree)


@dataclass(frozen=True, eq=False)
class HiggsField:
    """
    Complex section with `r` components of integer U(1) weights.

    Parameters
    ----------
    real, imag : numpy.ndarray
        `(n, n, r)` real and imaginary parts.
    weights : sequence of int
        Weight of each component.

    Raises
    ------
    ShapeMismatchError
        If the parts disagree in shape or with the number of weights.
    DomainError
        If any entry is NaN or infinite.

    """

    real: object
    imag: object
    weights: Tuple[int, ...]

    def __post_init__(self):
        real = np.asarray(self.real, dtype=FLOATX)
        imag = np.asarray(self.imag, dtype=FLOATX)
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "imag", imag)
        object.__setattr__(self, "weights", weights)

        if len(real.shape) != 3 or tuple(real.shape) != tuple(imag.shape):
            raise ShapeMismatchError(
                f"Higgs parts must be arrays of shape (n, n, r), received {real.shape} and {imag.shape}."
            )
        if real.shape[2] != len(weights):
            raise ShapeMismatchError(f"Received {real.shape[2]} components but {len(weights)} weights.")
        if not (np.all(np.isfinite(real)) and np.all(np.isfinite(imag))):
            raise DomainError("Higgs field contains non-finite entries.")

    @property
    def n(self) -> int:
        return int(self.real.shape[0])

    @property
    def rank(self) -> int:
        return len(self.weights)

    @property
    def values(self):
        return self.real, self.imag

    def weight_tensor(self):
        """Weights broadcastable against `(n, n, r)` arrays."""
        return np.asarray(self.weights, dtype=FLOATX).reshape(1, 1, self.rank)

    @classmethod
    def from_complex(cls, values, weights: Sequence[int]):
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim == 2:
            values = values[..., None]
        return cls(values.real, values.imag, tuple(weights))

    def to_complex(self) -> np.ndarray:
        return self.real + 1j * self.imag

    @classmethod
    def zeros(cls, n: int, weights: Sequence[int]):
        shape = (n, n, len(weights))
        return cls(np.zeros(shape, dtype=FLOATX), np.zeros(shape, dtype=FLOATX), tuple(weights))


@dataclass(frozen=True)
class CentralParam:
    """Central element `c = i t` and the scale `tau` used to size initial Higgs fields."""

    c: float
    tau: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.c):
            raise DomainError(f"Central parameter must be finite, received c={self.c}.")
        if not self.tau > 0:
            raise DomainError(f"`tau` must be positive, received tau={self.tau}.")


def central_value(c) -> float:
    """The real `t` of `c = i t`, from a `CentralParam` or a plain number."""
    t = float(c.c) if isinstance(c, CentralParam) else float(c)
    if not math.isfinite(t):
        raise DomainError(f"Central parameter must be finite, received c={t}.")
    return t


def check_shapes(lattice: TorusLattice, link: LinkField = None, higgs: HiggsField = None):
    for name, field in (("link", link), ("higgs", higgs)):
        if field is not None and field.n != lattice.n:
            raise ShapeMismatchError(f"The {name} field has n={field.n}, but the lattice has n={lattice.n}.")


def gauge_transform(link: LinkField, higgs: HiggsField, gauge):
    """
    Apply the site-wise gauge rotation `exp(i g)`.

    Parameters
    ----------
    link : LinkField
    higgs : HiggsField
    gauge : numpy.ndarray
        `(n, n)` gauge angles `g`.

    Returns
    -------
    link, higgs : (LinkField, HiggsField)
        Edge angles shifted by `g(s) - g(s + e)` and components rotated by `exp(i w_j g)`.

    """

    gauge = np.asarray(gauge, dtype=FLOATX)
    if tuple(gauge.shape) != (link.n, link.n):
        raise ShapeMismatchError(f"Gauge must have shape {(link.n, link.n)}, received {gauge.shape}.")
    if higgs.n != link.n:
        raise ShapeMismatchError(f"Link field has n={link.n}, Higgs field has n={higgs.n}.")

    angles_x = link.angles_x + gauge - np.roll(gauge, shift=-1, axis=0)
    angles_y = link.angles_y + gauge - np.roll(gauge, shift=-1, axis=1)

    phase = gauge[..., None] * higgs.weight_tensor()
    cos, sin = np.cos(phase), np.sin(phase)
    real = cos * higgs.real - sin * higgs.imag
    imag = sin * higgs.real + cos * higgs.imag

    return LinkField(angles_x, angles_y, link.degree), HiggsField(real, imag, higgs.weights)


# === snapshots ===
SNAPSHOT_KEYS = ("n", "side_length", "degree", "angles_x", "angles_y", "weights", "values_re", "values_im")


def snapshot_to_json(lattice: TorusLattice, link: LinkField, higgs: HiggsField) -> dict:
    """
    Serialize fields to a JSON-compatible dict.

    Arrays are flattened row-major: site `(ix, iy)` sits at index `ix * n + iy`, and component
    `j` of a Higgs value at `(ix * n + iy) * r + j`.

    """

    check_shapes(lattice, link, higgs)
    flat = lambda x: np.ravel(x).tolist()  # noqa: E731
    return {
        "n": lattice.n,
        "side_length": lattice.side_length,
        "degree": int(link.degree),
        "angles_x": flat(link.angles_x),
        "angles_y": flat(link.angles_y),
        "weights": list(higgs.weights),
        "values_re": flat(higgs.real),
        "values_im": flat(higgs.imag),
    }


def snapshot_from_json(document: dict):
    """
    Inverse of `snapshot_to_json`.

    Returns
    -------
    lattice, link, higgs : (TorusLattice, LinkField, HiggsField)

    Raises
    ------
    SchemaError
        If a key is missing or an array has the wrong length.

    """

    for key in SNAPSHOT_KEYS:
        if key not in document:
            raise SchemaError(key)

    n = document["n"]
    if not isinstance(n, int):
        raise SchemaError("n", f"Field `n` must be an integer, received {n!r}.")
    lattice = TorusLattice(n, float(document["side_length"]))
    weights = tuple(document["weights"])
    r = len(weights)

    def read(key, size, shape):
        values = document[key]
        if not isinstance(values, list) or len(values) != size:
            raise SchemaError(key, f"Field `{key}` must be a list of {size} numbers.")
        return np.asarray(values, dtype=np.float64).reshape(shape)

    link = LinkField(
        read("angles_x", n * n, (n, n)),
        read("angles_y", n * n, (n, n)),
        int(document["degree"]),
    )
    higgs = HiggsField(
        read("values_re", n * n * r, (n, n, r)),
        read("values_im", n * n * r, (n, n, r)),
        weights,
    )
    return lattice, link, higgs
