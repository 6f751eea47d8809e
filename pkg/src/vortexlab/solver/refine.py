"""
Gauss-Newton refinement of both equations after the gradient flow.

The descent stops at a minimizer of the lattice energy, where the equations hold only up to the
lattice Kahler term. The refinement solves `dbar_A Phi = 0` and `f + m - t = 0` directly as a
sparse nonlinear least-squares problem started from that minimizer.

"""

import logging

import numpy as np
from scipy import sparse
from scipy.optimize import least_squares

from ..errors import DomainError
from ..lattice import (
    TorusLattice,
    LinkField,
    HiggsField,
    check_shapes,
    central_value,
    dbar,
    plaquette_curvature,
    moment_map_linear,
    equation_residuals,
)

logger = logging.getLogger(__name__)


def pack_fields(link: LinkField, higgs: HiggsField) -> np.ndarray:
    """Flat vector `[angles_x, angles_y, real, imag]`, each block row-major."""
    return np.concatenate([np.ravel(a) for a in (link.angles_x, link.angles_y, higgs.real, higgs.imag)])


def unpack_fields(x, n: int, weights, degree: int):
    r = len(weights)
    sites = n * n
    angles_x, angles_y, real, imag = np.split(np.asarray(x, dtype=np.float64), [sites, 2 * sites, 2 * sites + sites * r])
    link = LinkField(angles_x.reshape(n, n), angles_y.reshape(n, n), degree)
    higgs = HiggsField(real.reshape(n, n, r), imag.reshape(n, n, r), weights)
    return link, higgs


def equation_vector(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice) -> np.ndarray:
    """Both equations stacked as `[Re dbar, Im dbar, f + m - t]`."""
    t = central_value(c)
    real, imag = dbar(link, higgs, lattice)
    balance = plaquette_curvature(link, lattice) + moment_map_linear(higgs) - t
    return np.concatenate([np.ravel(real), np.ravel(imag), np.ravel(balance)])


def jacobian_sparsity(n: int, rank: int):
    """
    Nonzero pattern of the Jacobian of `equation_vector` with respect to `pack_fields`.

    Returns
    -------
    pattern : scipy.sparse.csr_matrix
        `(2 n**2 r + n**2, 2 n**2 + 2 n**2 r)` matrix of ones.

    """

    sites = n * n
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    here = np.ravel(i * n + j)
    next_x = np.ravel(((i + 1) % n) * n + j)
    next_y = np.ravel(i * n + (j + 1) % n)

    angle_x, angle_y = 0, sites
    real = lambda s, k: 2 * sites + s * rank + k  # noqa: E731
    imag = lambda s, k: 2 * sites + sites * rank + s * rank + k  # noqa: E731

    rows, cols = [], []

    def connect(row, col):
        rows.append(row)
        cols.append(col)

    for k in range(rank):
        for block in (0, sites * rank):
            row = block + here * rank + k
            for col in (angle_x + here, angle_y + here):
                connect(row, col)
            for site in (here, next_x, next_y):
                connect(row, real(site, k))
                connect(row, imag(site, k))

    row = 2 * sites * rank + here
    for col in (angle_x + here, angle_y + next_x, angle_x + next_y, angle_y + here):
        connect(row, col)
    for k in range(rank):
        connect(row, real(here, k))
        connect(row, imag(here, k))

    rows, cols = np.concatenate(rows), np.concatenate(cols)
    shape = (2 * sites * rank + sites, 2 * sites + 2 * sites * rank)
    return sparse.coo_matrix((np.ones(rows.size), (rows, cols)), shape=shape).tocsr()


def refine_solution(link: LinkField, higgs: HiggsField, c, lattice: TorusLattice, tol: float, rounds: int = 20, evaluations: int = 20):
    """
    Drive both equation residuals towards zero with a trust-region Gauss-Newton method.

    Runs `scipy.optimize.least_squares` (`trf` with `lsmr` on the sparse finite-difference
    Jacobian) in rounds of at most `evaluations` residual evaluations. A round is kept only if it
    lowers the larger sup-norm residual, and the refinement stops once it is below `tol`.

    Parameters
    ----------
    link, higgs : LinkField, HiggsField
        Starting point, usually the end of the gradient flow.
    c : float | CentralParam
        Central parameter.
    lattice : TorusLattice
        Grid.
    tol : float
        Target for both sup-norm residuals.
    rounds : int, optional
        Maximal number of rounds. Defaults to `20`.
    evaluations : int, optional
        Residual evaluations per round. Defaults to `20`.

    Returns
    -------
    link, higgs, used : (LinkField, HiggsField, int)
        Refined fields and the number of residual evaluations spent.

    """

    check_shapes(lattice, link, higgs)
    t = central_value(c)
    n, weights, degree = lattice.n, higgs.weights, link.degree
    size = 2 * n * n * higgs.rank + n * n

    def residual(x):
        if not np.all(np.isfinite(x)):
            return np.full(size, np.inf)
        return equation_vector(*unpack_fields(x, n, weights, degree), t, lattice)

    pattern = jacobian_sparsity(n, higgs.rank)
    best = max(equation_residuals(link, higgs, t, lattice))
    used = 0

    for round_ in range(rounds):
        if best < tol:
            break
        try:
            result = least_squares(
                residual,
                pack_fields(link, higgs),
                jac_sparsity=pattern,
                method="trf",
                tr_solver="lsmr",
                x_scale="jac",
                ftol=1e-12,
                xtol=1e-12,
                gtol=1e-12,
                max_nfev=evaluations,
            )
            trial_link, trial_higgs = unpack_fields(result.x, n, weights, degree)
        except (DomainError, ValueError) as e:
            logger.warning("refinement round %d failed: %s", round_, e)
            break

        used += int(result.nfev)
        trial = max(equation_residuals(trial_link, trial_higgs, t, lattice))
        logger.info("refinement round %d: residual %.3e -> %.3e (%s)", round_, best, trial, result.message)
        if not trial < best:
            break
        link, higgs, best = trial_link, trial_higgs, trial

    return link, higgs, used
