import logging
import math
import warnings
from typing import Sequence

import numpy as np

from ..errors import DomainError, NonFiniteEnergyError
from ..lattice import (
    TorusLattice,
    LinkField,
    HiggsField,
    check_shapes,
    central_value,
    background_connection,
    ymh_energy,
    equation_residuals,
    bogomolov_value,
    energy_identity_defect,
    integrated_obstruction,
)
from ..ops import lattice_laplacian_symbol, spectral_filter
from .config import SolverConfig, SolveReport
from .gradient import ymh_gradient
from .refine import refine_solution
from .vortices import count_vortices

logger = logging.getLogger(__name__)


def initial_fields(
    degree: int,
    lattice: TorusLattice,
    weights: Sequence[int] = (1,),
    tau: float = 1.0,
    seed: int = 0,
    link_noise: float = 0.05,
):
    """
    Seeded starting point of the flow.

    Parameters
    ----------
    degree : int
        Degree of the bundle.
    lattice : TorusLattice
        Grid.
    weights : sequence of int, optional
        Higgs weights. Defaults to `(1,)`.
    tau : float, optional
        Target mean of `sum_j |Phi_j|**2`. Defaults to `1.0`.
    seed : int, optional
        Seed of the random generator. Defaults to `0`.
    link_noise : float, optional
        Links get uniform noise in `[-link_noise, link_noise]`. Defaults to `0.05`.

    Returns
    -------
    link, higgs : (LinkField, HiggsField)
        Background connection of `degree` plus noise, and an i.i.d. complex Gaussian Higgs field
        rescaled to mean square norm `tau`.

    """

    n = lattice.n
    rng = np.random.default_rng(seed)
    background = background_connection(degree, lattice)
    noise = rng.uniform(-link_noise, link_noise, size=(2, n, n))
    link = LinkField(
        background.angles_x + noise[0],
        background.angles_y + noise[1],
        degree,
    )

    values = rng.normal(size=(n, n, len(weights))) + 1j * rng.normal(size=(n, n, len(weights)))
    scale = math.sqrt(tau / np.mean(np.sum(np.abs(values) ** 2, axis=-1)))
    return link, HiggsField.from_complex(scale * values, weights)


def sobolev_precondition(link_grad, higgs_grad, lattice: TorusLattice, mass: float):
    """
    Turn a Euclidean gradient into a descent direction.

    The Higgs part is first divided by `h**2` (the L2 metric); both parts are then smoothed with
    the Fourier multiplier `1 / (mass + lambda(k))` of the lattice Laplacian. The map is positive
    definite, so the negated result decreases the energy for small steps.

    Returns
    -------
    link_dir, higgs_dir : tuple, tuple
        Same structure as the inputs.

    """

    multiplier = 1.0 / (mass + lattice_laplacian_symbol(lattice.n, lattice.spacing))
    h2 = lattice.cell_area
    link_dir = tuple(spectral_filter(g, multiplier) for g in link_grad)
    higgs_dir = tuple(spectral_filter(g / h2, multiplier) for g in higgs_grad)
    return link_dir, higgs_dir


class FlowState:
    """Handle passed to callbacks through `set_model`; they stop the flow via `stop_training`."""

    def __init__(self, lattice, link, higgs):
        self.lattice = lattice
        self.link = link
        self.higgs = higgs
        self.stop_training = False


def _inner(a, b):
    return sum(float(np.vdot(x, y)) for x, y in zip(a, b))


def _move(link, higgs, direction, step):
    (dx, dy), (dr, di) = direction
    moved_link = LinkField(link.angles_x - step * dx, link.angles_y - step * dy, link.degree)
    moved_higgs = HiggsField(higgs.real - step * dr, higgs.imag - step * di, higgs.weights)
    return moved_link, moved_higgs


def _energy(link, higgs, t, lattice):
    energy = ymh_energy(link, higgs, t, lattice)
    return energy, energy.total


def _trial(link, higgs, direction, step, t, lattice):
    try:
        trial_link, trial_higgs = _move(link, higgs, direction, step)
    except DomainError:
        return link, higgs, None, math.inf
    return (trial_link, trial_higgs) + _energy(trial_link, trial_higgs, t, lattice)


def solve(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice, config: SolverConfig = None, callbacks=None):
    """
    Minimize the Yang-Mills-Higgs energy by preconditioned gradient descent, then refine the equations.

    Parameters
    ----------
    link : LinkField
        Initial connection.
    higgs : HiggsField
        Initial Higgs field.
    c : float | CentralParam
        Central parameter.
    lattice : TorusLattice
        Grid.
    config : SolverConfig, optional
        Flow settings. Defaults to `SolverConfig()`.
    callbacks : list of keras.callbacks.Callback, optional
        Receive `on_train_begin`, `on_epoch_end(iteration, logs)` and `on_train_end`. Setting
        `self.model.stop_training = True` ends the run with status `"stopped"`.

    Returns
    -------
    link, higgs, report : (LinkField, HiggsField, SolveReport)

    Raises
    ------
    NonFiniteEnergyError
        If the energy becomes NaN or infinite.

    Notes
    -----
    The energy never increases along the flow with the Armijo line search. A flow that ends
    unconverged is handed to `refine_solution` when `config.refine` is set; the refined fields
    replace the flow result and the status becomes `"converged"` once both residuals are below
    `tol_residual`. Otherwise the flow status is kept. `energy_trace` covers the flow only.
    Running out of iterations is not an error.

    """

    config = config or SolverConfig()
    callbacks = list(callbacks or [])
    check_shapes(lattice, link, higgs)
    t = central_value(c)
    mass = config.precondition_mass or max(1.0, abs(t))

    state = FlowState(lattice, link, higgs)
    for callback in callbacks:
        callback.set_model(state)
        callback.set_params({"max_iters": config.max_iters, "record_every": config.record_every})

    breakdown, energy = _energy(link, higgs, t, lattice)
    if not math.isfinite(energy):
        raise NonFiniteEnergyError(f"Initial energy is not finite ({energy}).")

    trace = [(0, energy)]
    step = config.step
    status = "max_iters"
    iteration = 0

    for callback in callbacks:
        callback.on_train_begin({"energy": energy})

    residual_eq1, residual_eq2 = equation_residuals(link, higgs, t, lattice)
    while True:
        if max(residual_eq1, residual_eq2) < config.tol_residual:
            status = "converged"
            break
        if iteration >= config.max_iters:
            break

        gradient = ymh_gradient(link, higgs, t, lattice)
        direction = sobolev_precondition(*gradient, lattice, mass)
        slope = -(_inner(gradient[0], direction[0]) + _inner(gradient[1], direction[1]))

        if config.line_search == "armijo":
            while True:
                trial_link, trial_higgs, trial_breakdown, trial_energy = _trial(link, higgs, direction, step, t, lattice)
                if math.isfinite(trial_energy) and trial_energy <= energy + config.armijo_c * step * slope:
                    break
                step *= config.armijo_shrink
                logger.debug("iteration %d: backtracking to step %.3e", iteration, step)
                if step < config.min_step:
                    trial_link = None
                    break

            if trial_link is None:
                warnings.warn(
                    f"No sufficient decrease above step {config.min_step} at iteration {iteration}; stopping at a stationary point.",
                    RuntimeWarning,
                )
                status = "stationary"
                step = config.min_step
                break
        else:
            trial_link, trial_higgs, trial_breakdown, trial_energy = _trial(link, higgs, direction, step, t, lattice)
            if not math.isfinite(trial_energy):
                raise NonFiniteEnergyError(
                    f"Energy became {trial_energy} at iteration {iteration + 1} with fixed step {step}."
                )
            if trial_energy > energy:
                warnings.warn(
                    f"Energy increased from {energy} to {trial_energy} at iteration {iteration + 1}.",
                    RuntimeWarning,
                )

        link, higgs, breakdown, energy = trial_link, trial_higgs, trial_breakdown, trial_energy
        iteration += 1
        residual_eq1, residual_eq2 = equation_residuals(link, higgs, t, lattice)
        state.link, state.higgs = link, higgs

        if iteration % config.record_every == 0:
            trace.append((iteration, energy))
            logger.info(
                "iteration %d: energy %.12g, residuals %.3e / %.3e, step %.3e",
                iteration, energy, residual_eq1, residual_eq2, step,
            )

        logs = {"energy": energy, "residual_eq1": residual_eq1, "residual_eq2": residual_eq2, "step": step}
        for callback in callbacks:
            callback.on_epoch_end(iteration, logs)

        if config.line_search == "armijo":
            step *= config.step_growth

        if state.stop_training:
            status = "stopped"
            break

    if trace[-1][0] != iteration:
        trace.append((iteration, energy))

    refine_evaluations = 0
    if status != "converged" and config.refine:
        link, higgs, refine_evaluations = refine_solution(
            link, higgs, t, lattice, config.tol_residual, config.refine_rounds, config.refine_round_evaluations
        )
        if refine_evaluations:
            breakdown, energy = _energy(link, higgs, t, lattice)
            residual_eq1, residual_eq2 = equation_residuals(link, higgs, t, lattice)
            state.link, state.higgs = link, higgs
            if max(residual_eq1, residual_eq2) < config.tol_residual:
                status = "converged"

    report = SolveReport(
        iterations=iteration,
        final_energy=energy,
        term_breakdown=breakdown.terms(),
        residual_eq1=residual_eq1,
        residual_eq2=residual_eq2,
        energy_trace=trace,
        converged=status == "converged",
        bogomolov=bogomolov_value(link, higgs, t, lattice),
        status=status,
        vortex_count=count_vortices(higgs),
        step=step,
        integrated_obstruction=integrated_obstruction(link, higgs, t, lattice),
        identity_defect=energy_identity_defect(link, higgs, t, lattice),
        refine_evaluations=refine_evaluations,
    )

    for callback in callbacks:
        callback.on_train_end(report.to_dict())

    logger.info(
        "solve finished: %s after %d iterations, energy %.12g", status, iteration, energy
    )
    return link, higgs, report
