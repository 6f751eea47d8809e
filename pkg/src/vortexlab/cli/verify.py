"""
Acceptance checks run by `vortexlab verify`.

Every check returns `(passed, detail)`. The checks share no state and run on a thread pool sized
by `vortexlab.config.threads()`.

"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from .. import config
from ..callbacks import EnergyStallStopping
from ..index import (
    sweep_split_bundles,
    sweep_weight_data,
    index_s1,
    index_cyclic,
    index_oracle,
    roots_of_unity_sums,
    bubble_codim_check,
)
from ..lattice import (
    TorusLattice,
    HiggsField,
    LinkField,
    background_connection,
    total_curvature,
    energy_identity_defect,
    topological_term,
    smooth_fields,
)
from ..s2 import ClassB, moduli_dimension, invariant_phibar
from ..solver import SolverConfig, initial_fields, solve, finite_difference_check
from ..stability import (
    FiltrationSpec,
    SubsheafCandidate,
    admissible_c,
    is_stable,
    s2_pair_window,
    bogomolov_filtration,
)
from ..weights import (
    WeightedPoint,
    max_weight_linear,
    max_weight_projective,
    moment_pairing_projective,
    lambda_t_projective,
    psi_projective,
    is_analytically_stable,
    kempf_ness_find_zero,
)
from ..errors import UnstableError

logger = logging.getLogger(__name__)

FUZZ_CASES = 1000


def check_index_oracle():
    cases = 0
    for bundle in sweep_split_bundles():
        data = bundle.weight_data()
        closed = index_s1(data) if data.group.is_circle else index_cyclic(data)
        if closed != index_oracle(bundle):
            return False, f"mismatch on {bundle}"
        cases += 1
    return cases >= 10_000, f"{cases} split bundles"


def check_degree_identity():
    cases = 0
    for bundle in sweep_split_bundles(moduli=()):
        data = bundle.weight_data()
        if bundle.degree != data.Pp + data.Nm - data.Pm - data.Np:
            return False, f"degree identity fails on {bundle}"
        cases += 1
    return True, f"{cases} circle bundles"


def check_roots_of_unity():
    worst = 0.0
    for m in range(2, 51):
        for w in range(1, m):
            first, second = roots_of_unity_sums(m, w)
            worst = max(worst, abs(first - (m - 1) / 2), abs(second - (-(m - 1) / 2 + w - 1)))
    return worst < 1e-9, f"worst deviation {worst:.2e}"


def check_bubble_bound():
    cases = 0
    for data in sweep_weight_data():
        if data.deg < 1 or data.moving < 2:
            continue
        if not bubble_codim_check(data):
            return False, f"counterexample {data.to_json()}"
        cases += 1
    return cases >= 10_000, f"{cases} weight configurations"


def check_gradient():
    lattice = TorusLattice(16)
    link, higgs = initial_fields(1, lattice, weights=(1, -1), tau=1.0, seed=7, link_noise=0.1)
    error = finite_difference_check(link, higgs, 0.7, lattice, samples=100, eps=1e-5, seed=7)
    return error < 1e-6, f"worst relative error {error:.2e}"


def vacuum_fields(lattice: TorusLattice, tau: float, noise: float = 0.05, seed: int = 0):
    """Weight-1 Higgs field of modulus close to `sqrt(tau)` on the flat connection."""
    rng = np.random.default_rng(seed)
    n = lattice.n
    values = math.sqrt(tau) * (1 + noise * (rng.normal(size=(n, n, 1)) + 1j * rng.normal(size=(n, n, 1))))
    return LinkField.zeros(n), HiggsField.from_complex(values, (1,))


def check_vacuum():
    tau = 64.0
    lattice = TorusLattice(32)
    link, higgs = vacuum_fields(lattice, tau)
    start = time.perf_counter()
    _, _, report = solve(link, higgs, -tau / 2, lattice, SolverConfig(max_iters=2000))
    elapsed = time.perf_counter() - start
    passed = report.converged and report.final_energy < 1e-10 and elapsed < 5
    return passed, f"{report.status}, energy {report.final_energy:.2e}, {elapsed:.1f} s"


def check_one_vortex():
    tau = 2.0
    t = 2 * math.pi + tau / 2
    lattice = TorusLattice(32)
    link, higgs = initial_fields(1, lattice, weights=(-1,), tau=tau, seed=0)
    stall = EnergyStallStopping(min_delta=1e-8, patience=20)
    link, higgs, report = solve(link, higgs, t, lattice, SolverConfig(max_iters=3000, tol_residual=1e-6), [stall])
    topological = topological_term(link, higgs, t, lattice)
    relative = abs(report.final_energy - topological) / topological
    residuals = max(report.residual_eq1, report.residual_eq2)
    passed = report.converged and residuals < 1e-5 and report.vortex_count == 1 and report.bogomolov >= -1e-6 and relative < 0.02
    return passed, f"{report.vortex_count} vortex, energy off by {relative:.2%}, residuals {report.residual_eq1:.1e}/{report.residual_eq2:.1e}"


def check_refinement():
    defects = []
    for n in (32, 64):
        lattice, link, higgs = smooth_fields(n)
        defects.append(energy_identity_defect(link, higgs, 0.3, lattice))
    return defects[1] <= 0.7 * defects[0], f"defects {defects[0]:.3e} -> {defects[1]:.3e}"


def check_chern_weil():
    lattice = TorusLattice(32)
    worst = max(abs(total_curvature(background_connection(d, lattice), lattice) - 2 * math.pi * d) for d in range(-8, 9))
    return worst < 1e-10, f"worst deviation {worst:.2e}"


def _random_projective(rng, size=None):
    size = size or int(rng.integers(2, 6))
    coords = rng.normal(size=size) + 1j * rng.normal(size=size)
    coords[rng.random(size) < 0.3] = 0
    if not np.any(coords):
        coords[0] = 1
    weights = rng.integers(-4, 5, size=size).astype(float)
    return WeightedPoint(tuple(coords), tuple(weights))


def check_maximal_weights():
    examples = [
        max_weight_linear(WeightedPoint((1,), (-2,), "linear")).value == 0,
        max_weight_linear(WeightedPoint((1,), (1,), "linear")).infinite,
        max_weight_projective(WeightedPoint((1, 1), (1, -1))).value == 1,
        max_weight_projective(WeightedPoint((0, 1), (1, -1))).value == -1,
        moment_pairing_projective(WeightedPoint((1, 1), (1, -1))) == 0,
    ]
    if not all(examples):
        return False, "worked examples differ"

    rng = np.random.default_rng(0)
    ts = np.linspace(-3, 3, 13)
    for _ in range(FUZZ_CASES):
        p = _random_projective(rng)
        curve = [lambda_t_projective(p, t) for t in ts]
        if any(b < a - 1e-12 for a, b in zip(curve, curve[1:])):
            return False, "lambda_t decreases"
        psi = [psi_projective(p, s).closed_form for s in ts]
        if min(np.diff(psi, 2)) < -1e-9:
            return False, "psi is not convex"
    return True, f"{FUZZ_CASES} projective points"


def check_kempf_ness():
    rng = np.random.default_rng(1)
    stable = unstable = 0
    for _ in range(FUZZ_CASES):
        p = _random_projective(rng)
        c = float(rng.uniform(-5, 5))
        if is_analytically_stable(p, c):
            if kempf_ness_find_zero(p, c).residual >= 1e-10:
                return False, f"residual too large at c={c}"
            stable += 1
            continue
        try:
            kempf_ness_find_zero(p, c)
        except UnstableError:
            unstable += 1
            continue
        return False, f"unstable instance not flagged at c={c}"
    return True, f"{stable} stable, {unstable} unstable"


def check_s2_example():
    for p in range(1, 40):
        for q in range(1, 41 - p):
            if p == q:
                continue
            B = ClassB(p, q)
            if moduli_dimension(B) != p + q or invariant_phibar(B) != 1:
                return False, f"B=({p}, {q})"
    table = [
        s2_pair_window(0, 1, Fraction(1, 2)) is True,
        s2_pair_window(2, 1, Fraction(1, 2)) is False,
        s2_pair_window(Fraction(3, 2), 1, Fraction(1, 2)) is False,
        s2_pair_window(-1, 2, 0) is True,
    ]
    return all(table), "dimension and invariant for p + q <= 40"


def check_stability():
    spec = FiltrationSpec(2, 0, [(1, -1)], [1])
    examples = [
        admissible_c(spec) == Fraction(1, 2),
        admissible_c(FiltrationSpec(3, 2, [(1, -1), (2, 0)], [1, Fraction(1, 2)])) == Fraction(4, 3),
        is_stable(spec, [SubsheafCandidate(1, -1, (1,))]).stable,
        is_stable(spec, [SubsheafCandidate(1, 0, (0,))]).stable,
        not is_stable(spec, [SubsheafCandidate(1, 1, (0,))]).stable,
        bogomolov_filtration(spec) == 1,
        bogomolov_filtration(FiltrationSpec(2, -4, [(1, 0)], [1])) == 6,
    ]
    if not all(examples):
        return False, "worked examples differ"

    rng = np.random.default_rng(2)
    for _ in range(FUZZ_CASES):
        R = int(rng.integers(2, 6))
        ranks = sorted(set(int(r) for r in rng.integers(1, R + 1, size=int(rng.integers(0, 3)))))
        spec = FiltrationSpec(
            R,
            int(rng.integers(-6, 7)),
            [(r, int(rng.integers(-4, 5))) for r in ranks],
            [Fraction(int(rng.integers(0, 7)), int(rng.integers(1, 4))) for _ in ranks],
        )
        candidates = []
        for _ in range(4):
            rank = int(rng.integers(1, R))
            meets, last = [], 0
            for r in ranks:
                last = int(rng.integers(last, min(r, rank) + 1))
                meets.append(last)
            candidates.append(SubsheafCandidate(rank, int(rng.integers(-6, 7)), tuple(meets)))
        factor = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
        before = is_stable(spec, candidates).stable
        after = is_stable(spec.rescaled(factor), [c.rescaled(factor) for c in candidates]).stable
        if before != after:
            return False, f"verdict changes under rescaling by {factor}"
    return True, f"{FUZZ_CASES} random filtrations"


CHECKS = {
    "index-oracle": check_index_oracle,
    "degree-identity": check_degree_identity,
    "roots-of-unity": check_roots_of_unity,
    "bubble-bound": check_bubble_bound,
    "gradient": check_gradient,
    "vacuum": check_vacuum,
    "one-vortex": check_one_vortex,
    "refinement": check_refinement,
    "chern-weil": check_chern_weil,
    "maximal-weights": check_maximal_weights,
    "kempf-ness": check_kempf_ness,
    "s2-example": check_s2_example,
    "stability": check_stability,
}


def _run(name):
    start = time.perf_counter()
    try:
        passed, detail = CHECKS[name]()
    except Exception as e:  # a crashing check is a failed check
        logger.exception("check %s raised", name)
        passed, detail = False, f"{type(e).__name__}: {e}"
    return {"check": name, "passed": bool(passed), "detail": detail, "seconds": round(time.perf_counter() - start, 3)}


def run_checks(names=None):
    """
    Run the named checks, all of them by default.

    Returns
    -------
    rows : list of dict
        One row per check with `check`, `passed`, `detail` and `seconds`.

    """

    names = list(names or CHECKS)
    with ThreadPoolExecutor(max_workers=min(config.threads(), len(names))) as pool:
        return list(pool.map(_run, names))


def format_table(rows) -> str:
    width = max(len(row["check"]) for row in rows)
    lines = [f"{row['check']:<{width}}  {'PASS' if row['passed'] else 'FAIL'}  {row['detail']}" for row in rows]
    return "\n".join(lines)
