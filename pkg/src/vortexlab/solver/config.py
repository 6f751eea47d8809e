from dataclasses import dataclass, field, fields, asdict
from typing import List, Optional, Tuple

from ..errors import DomainError, SchemaError


LINE_SEARCHES = ("armijo", "fixed")
STATUSES = ("converged", "stationary", "max_iters", "stopped")


@dataclass
class SolverConfig:
    """
    Settings of the gradient flow.

    Parameters
    ----------
    max_iters : int, optional
        Iteration budget. Defaults to `5000`.
    step : float, optional
        Initial (dimensionless) step of the preconditioned flow. Defaults to `0.5`.
    tol_residual : float, optional
        The run converges once both equation residuals drop below it. Defaults to `1e-8`.
    line_search : str, optional {"armijo", "fixed"}
        Backtracking line search or a fixed step. Defaults to `"armijo"`.
    seed : int, optional
        Seed of the initial fields. Defaults to `0`.
    record_every : int, optional
        Trace and log period in iterations. Defaults to `10`.
    armijo_shrink : float, optional
        Step reduction factor while backtracking. Defaults to `0.5`.
    armijo_c : float, optional
        Sufficient-decrease constant. Defaults to `1e-4`.
    step_growth : float, optional
        Step increase after an accepted step. Defaults to `2.0`.
    min_step : float, optional
        Backtracking below this step ends the run as stationary. Defaults to `1e-14`.
    precondition_mass : float, optional
        Mass of the Sobolev preconditioner. `None` means `max(1, |t|)`. Defaults to `None`.
    link_noise : float, optional
        Amplitude of the uniform noise on the initial link angles. Defaults to `0.05`.
    refine : bool, optional
        Run the Gauss-Newton refinement of both equations when the flow ends unconverged.
        Defaults to `True`.
    refine_rounds : int, optional
        Maximal number of refinement rounds. Defaults to `20`.
    refine_round_evaluations : int, optional
        Residual evaluations per refinement round. Defaults to `20`.

    """

    max_iters: int = 5000
    step: float = 0.5
    tol_residual: float = 1e-8
    line_search: str = "armijo"
    seed: int = 0
    record_every: int = 10
    armijo_shrink: float = 0.5
    armijo_c: float = 1e-4
    step_growth: float = 2.0
    min_step: float = 1e-14
    precondition_mass: Optional[float] = None
    link_noise: float = 0.05
    refine: bool = True
    refine_rounds: int = 20
    refine_round_evaluations: int = 20

    def __post_init__(self):
        if self.max_iters < 1:
            raise DomainError(f"`max_iters` must be at least 1, received {self.max_iters}.")
        if not self.tol_residual > 0:
            raise DomainError(f"`tol_residual` must be positive, received {self.tol_residual}.")
        if not self.step > 0:
            raise DomainError(f"`step` must be positive, received {self.step}.")
        if self.line_search not in LINE_SEARCHES:
            raise DomainError(f"`line_search` must be one of {LINE_SEARCHES}, received {self.line_search!r}.")
        if self.record_every < 1:
            raise DomainError(f"`record_every` must be at least 1, received {self.record_every}.")
        if not 0 < self.armijo_shrink < 1:
            raise DomainError(f"`armijo_shrink` must lie in (0, 1), received {self.armijo_shrink}.")
        if self.precondition_mass is not None and not self.precondition_mass > 0:
            raise DomainError(f"`precondition_mass` must be positive, received {self.precondition_mass}.")
        if not isinstance(self.refine, bool):
            raise DomainError(f"`refine` must be a boolean, received {self.refine!r}.")
        if self.refine_rounds < 1 or self.refine_round_evaluations < 1:
            raise DomainError(
                f"Refinement budgets must be at least 1, received {self.refine_rounds} rounds of {self.refine_round_evaluations} evaluations."
            )

    def get_config(self) -> dict:
        return asdict(self)

    @classmethod
    def from_config(cls, config: dict):
        known = {f.name for f in fields(cls)}
        for key in config:
            if key not in known:
                raise SchemaError(key, f"Unknown solver option `{key}`.")
        return cls(**config)


@dataclass
class SolveReport:
    """
    Outcome of `solve`.

    `term_breakdown` holds the curvature, kinetic and potential terms of the final energy and
    `energy_trace` the `(iteration, energy)` pairs recorded every `record_every` iterations of the
    flow. `refine_evaluations` counts the residual evaluations of the refinement stage.

    """

    iterations: int
    final_energy: float
    term_breakdown: dict
    residual_eq1: float
    residual_eq2: float
    energy_trace: List[Tuple[int, float]] = field(default_factory=list)
    converged: bool = False
    bogomolov: float = 0.0
    status: str = "max_iters"
    vortex_count: int = 0
    step: float = 0.0
    integrated_obstruction: float = 0.0
    identity_defect: float = 0.0
    refine_evaluations: int = 0

    def to_dict(self) -> dict:
        document = asdict(self)
        document["energy_trace"] = [[int(i), float(e)] for i, e in self.energy_trace]
        return document

    @classmethod
    def from_dict(cls, document: dict):
        known = {f.name for f in fields(cls)}
        for name in ("iterations", "final_energy", "term_breakdown", "residual_eq1", "residual_eq2"):
            if name not in document:
                raise SchemaError(name)
        kwargs = {k: v for k, v in document.items() if k in known}
        kwargs["energy_trace"] = [(int(i), float(e)) for i, e in document.get("energy_trace", [])]
        return cls(**kwargs)
