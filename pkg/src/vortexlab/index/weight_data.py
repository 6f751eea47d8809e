"""
Fixed-point data of circle and cyclic actions on split bundles over `CP^1`.

The summands of a split bundle carry integer fiber weights at the poles `x_+ = 0` and
`x_- = infinity`; `WeightData` keeps only how many of them are positive, zero or negative.

"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import DomainError, InconsistentWeightsError


@dataclass(frozen=True)
class Group:
    """
    The circle or a cyclic subgroup `Z/m` acting through the character `l`.

    Parameters
    ----------
    kind : str {"circle", "cyclic"}
    m : int, optional
        Order, at least 2 for cyclic groups.
    l : int, optional
        Generator of the action, `1 <= l <= m - 1`.

    """

    kind: str = "circle"
    m: Optional[int] = None
    l: Optional[int] = None

    def __post_init__(self):
        if self.kind == "circle":
            if self.m is not None or self.l is not None:
                raise DomainError("The circle group takes no `m` or `l`.")
        elif self.kind == "cyclic":
            if self.m is None or self.l is None:
                raise DomainError("A cyclic group needs `m` and `l`.")
            if self.m < 2 or not 1 <= self.l <= self.m - 1:
                raise DomainError(f"Cyclic group needs m >= 2 and 1 <= l <= m-1, received m={self.m}, l={self.l}.")
        else:
            raise DomainError(f"`group` must be 'circle' or 'cyclic', received {self.kind!r}.")

    @classmethod
    def circle(cls):
        return cls("circle")

    @classmethod
    def cyclic(cls, m: int, l: int):
        return cls("cyclic", m, l)

    @property
    def is_circle(self) -> bool:
        return self.kind == "circle"

    @property
    def lprime(self) -> int:
        """Representative of `l` modulo `m` in `[1, m - 1]`."""
        return self.l % self.m

    def classify(self, weight: int) -> str:
        """`"P"`, `"Z"` or `"N"` for a fiber weight."""
        if self.is_circle:
            return "P" if weight > 0 else ("N" if weight < 0 else "Z")
        residue = weight % self.m
        if residue == 0:
            return "Z"
        # 2l = 0 mod m makes l and -l the same character; count it as positive
        if residue == self.l % self.m:
            return "P"
        if residue == (-self.l) % self.m:
            return "N"
        raise InconsistentWeightsError(f"Weight {weight} is not in {{-l, 0, l}} for l={self.l}, m={self.m}.")

    def to_json(self) -> dict:
        if self.is_circle:
            return {"group": "circle"}
        return {"group": "cyclic", "m": self.m, "l": self.l}


@dataclass(frozen=True)
class Summand:
    """Line bundle `O(degree)` with fiber weights at both poles."""

    degree: int
    w_plus: int
    w_minus: int

    @property
    def delta_weight(self) -> int:
        """`a_+ + a_-`, which has the parity of the degree for a circle lift."""
        return self.w_plus + self.w_minus


@dataclass(frozen=True)
class SplitBundle:
    """
    Sum of line bundles with a lift of the rotation action.

    Circle lifts need `degree = w_plus - w_minus`; cyclic lifts need fiber weights in
    `{-l, 0, l}` and `degree = w_plus - w_minus (mod m)`.

    """

    summands: Tuple[Summand, ...]
    group: Group = Group()

    def __post_init__(self):
        summands = tuple(s if isinstance(s, Summand) else Summand(*s) for s in self.summands)
        object.__setattr__(self, "summands", summands)
        if not summands:
            raise DomainError("A split bundle needs at least one summand.")
        for s in summands:
            if self.group.is_circle:
                if s.degree != s.w_plus - s.w_minus:
                    raise InconsistentWeightsError(
                        f"Circle lift of O({s.degree}) needs w_plus - w_minus = {s.degree}, received ({s.w_plus}, {s.w_minus})."
                    )
            else:
                m, l = self.group.m, self.group.l
                if s.w_plus not in (-l, 0, l) or s.w_minus not in (-l, 0, l):
                    raise InconsistentWeightsError(
                        f"Cyclic fiber weights must lie in {{-{l}, 0, {l}}}, received ({s.w_plus}, {s.w_minus})."
                    )
                if (s.degree - s.w_plus + s.w_minus) % m:
                    raise InconsistentWeightsError(
                        f"O({s.degree}) cannot carry the weights ({s.w_plus}, {s.w_minus}) of Z/{m}."
                    )

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.summands)

    def weight_data(self):
        counts = {key: 0 for key in ("Pp", "Zp", "Np", "Pm", "Zm", "Nm")}
        for s in self.summands:
            counts[self.group.classify(s.w_plus) + "p"] += 1
            counts[self.group.classify(s.w_minus) + "m"] += 1
        return WeightData(self.rank, self.degree, group=self.group, **counts)


@dataclass(frozen=True)
class WeightData:
    """
    Counts of positive, zero and negative fiber weights at `x_+` and `x_-`.

    Raises
    ------
    InconsistentWeightsError
        If the counts do not add up to the rank at both poles, or, for the circle, if
        `deg != Pp + Nm - Pm - Np`.

    """

    rank: int
    deg: int
    Pp: int = 0
    Zp: int = 0
    Np: int = 0
    Pm: int = 0
    Zm: int = 0
    Nm: int = 0
    group: Group = Group()

    def __post_init__(self):
        counts = (self.Pp, self.Zp, self.Np, self.Pm, self.Zm, self.Nm)
        if any(k < 0 for k in counts):
            raise InconsistentWeightsError(f"Weight counts must be non-negative, received {counts}.")
        if self.Pp + self.Zp + self.Np != self.rank or self.Pm + self.Zm + self.Nm != self.rank:
            raise InconsistentWeightsError(
                f"Weight counts must add up to the rank {self.rank} at both poles, received {counts}."
            )
        if self.group.is_circle and self.deg != self.Pp + self.Nm - self.Pm - self.Np:
            raise InconsistentWeightsError(
                f"Circle weight data needs deg = Pp + Nm - Pm - Np = {self.Pp + self.Nm - self.Pm - self.Np}, received deg={self.deg}."
            )

    @property
    def moving(self) -> int:
        """`P_+ + N_+ + P_- + N_-`."""
        return self.Pp + self.Np + self.Pm + self.Nm

    def to_split_bundle(self) -> SplitBundle:
        """
        A split bundle realizing these counts.

        Raises
        ------
        InconsistentWeightsError
            If no cyclic lift reaches the degree, i.e. `deg != sum(b_+ - b_-) (mod m)`.

        """

        unit = 1 if self.group.is_circle else self.group.l
        plus = [unit] * self.Pp + [0] * self.Zp + [-unit] * self.Np
        minus = [unit] * self.Pm + [0] * self.Zm + [-unit] * self.Nm
        degrees = [a - b for a, b in zip(plus, minus)]

        if not self.group.is_circle:
            gap = self.deg - sum(degrees)
            if gap % self.group.m:
                raise InconsistentWeightsError(
                    f"Degree {self.deg} is not reachable: it must equal {sum(degrees)} modulo {self.group.m}."
                )
            degrees[0] += gap
        return SplitBundle(tuple(Summand(d, a, b) for d, a, b in zip(degrees, plus, minus)), self.group)

    def to_json(self) -> dict:
        document = {"rank": self.rank, "deg": self.deg}
        for key in ("Pp", "Zp", "Np", "Pm", "Zm", "Nm"):
            document[key] = getattr(self, key)
        document.update(self.group.to_json())
        return document
