"""
Equivariant cohomology of the rotated sphere, `Z[a, b] / (b^3 + a b^2)` with `deg a = deg b = 2`.

"""

from dataclasses import dataclass
from typing import Dict, Tuple

from ..errors import DomainError


def _reduce(coeffs: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    """Rewrite `a^i b^j`, `j >= 3`, as `(-1)^(j-2) a^(i+j-2) b^2` and drop zero coefficients."""
    reduced = {}
    for (i, j), value in coeffs.items():
        if i < 0 or j < 0:
            raise DomainError(f"Monomial exponents must be non-negative, received a^{i} b^{j}.")
        if j >= 3:
            value = value * (-1) ** (j - 2)
            i, j = i + j - 2, 2
        reduced[(i, j)] = reduced.get((i, j), 0) + int(value)
    return {key: value for key, value in reduced.items() if value != 0}


@dataclass(frozen=True, eq=False)
class EquivClass:
    """
    Integer polynomial in `a` and `b`, stored reduced so that every monomial has `b`-degree at most 2.

    Parameters
    ----------
    coeffs : dict
        Map `(i, j) -> coefficient` of `a^i b^j`.

    Examples
    --------
    >>> (EquivClass.b() * EquivClass.b() * EquivClass.b()).coeffs
    {(1, 2): -1}

    """

    coeffs: Dict[Tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _reduce(dict(self.coeffs)))

    @property
    def normalized(self) -> bool:
        return all(j <= 2 for _, j in self.coeffs)

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def a(cls):
        return cls({(1, 0): 1})

    @classmethod
    def b(cls):
        return cls({(0, 1): 1})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        """Cohomological degrees `2 (i + j)` of the monomials present."""
        return {2 * (i + j) for i, j in self.coeffs}

    def __add__(self, other):
        other = _coerce(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, 0) + value
        return EquivClass(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return EquivClass({key: -value for key, value in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return ring_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = EquivClass.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            return self.coeffs == _coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __repr__(self):
        if self.is_zero:
            return "EquivClass(0)"
        terms = []
        for (i, j), value in sorted(self.coeffs.items()):
            monomial = "*".join(part for part in (f"a^{i}" if i else "", f"b^{j}" if j else "") if part) or "1"
            terms.append(f"{value}*{monomial}")
        return f"EquivClass({' + '.join(terms)})"


def _coerce(x) -> EquivClass:
    if isinstance(x, EquivClass):
        return x
    if isinstance(x, int):
        return EquivClass({(0, 0): x})
    raise TypeError(f"Cannot combine an EquivClass with {type(x).__name__}.")


def ring_mul(u: EquivClass, v: EquivClass) -> EquivClass:
    """Product in the quotient ring, reduced by `b^3 -> -a b^2`."""
    product = {}
    for (i1, j1), x in u.coeffs.items():
        for (i2, j2), y in v.coeffs.items():
            key = (i1 + i2, j1 + j2)
            product[key] = product.get(key, 0) + x * y
    return EquivClass(product)


def tangent_class() -> EquivClass:
    """Equivariant first Chern class of the tangent bundle of the sphere, `a - 2b`."""
    return EquivClass.a() - 2 * EquivClass.b()


@dataclass(frozen=True)
class ClassB:
    """
    Homology class `B = (p, q)`: `deg E = p - q` and `deg Phi^* O(-1) = -q`.

    """

    p: int
    q: int

    def __post_init__(self):
        if int(self.p) != self.p or int(self.q) != self.q or self.p < 0 or self.q < 0:
            raise DomainError(f"`p` and `q` must be non-negative integers, received ({self.p}, {self.q}).")

    def require_simple(self):
        """Invariants are only defined for `0 != q != p`."""
        if self.q == 0 or self.q == self.p:
            raise DomainError(f"The class B=({self.p}, {self.q}) needs 0 != q != p.")
        return self


def pair_with_B(u: EquivClass, B: ClassB) -> int:
    """
    Pairing of a degree-2 class with `B`: `<a, B> = p - q` and `<b, B> = -q`.

    Raises
    ------
    DomainError
        If `u` has a monomial of cohomological degree other than 2.

    """

    if u.degrees() - {2}:
        raise DomainError(f"Only degree-2 classes pair with B, received degrees {sorted(u.degrees())}.")
    return u.coeffs.get((1, 0), 0) * (B.p - B.q) + u.coeffs.get((0, 1), 0) * (-B.q)
