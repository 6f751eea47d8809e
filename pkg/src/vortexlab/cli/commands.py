"""
Subcommands of the `vortexlab` tool. Each takes the parsed config and the argparse namespace
and returns the JSON-compatible result.

"""

import logging

from ..callbacks import TraceCSVLogger
from ..errors import SchemaError
from ..index import (
    Group,
    Summand,
    SplitBundle,
    WeightData,
    index_s1,
    index_cyclic,
    index_oracle,
    bubble_codim_check,
)
from ..lattice import TorusLattice, snapshot_from_json, snapshot_to_json
from ..s2 import ClassB, moduli_dimension, invariant_phibar, pair_with_B, tangent_class, window_examples
from ..solver import SolverConfig, initial_fields, solve
from ..stability import FiltrationSpec, SubsheafCandidate, is_stable, tau_slope, bogomolov_filtration
from ..weights import (
    WeightedPoint,
    GrassData,
    max_weight_linear,
    max_weight_projective,
    moment_pairing_projective,
    lambda_t_projective,
    psi_projective,
    is_analytically_stable,
    kempf_ness_find_zero,
    max_weight_grassmann,
    lambda_t_grassmann,
    max_weight_s2,
    moment_s2,
)
from .io import require, parse_rational, parse_complex, write_document

logger = logging.getLogger(__name__)


# === solve ===
def run_solve(document: dict, args) -> dict:
    n = require(document, "n", int)
    degree = require(document, "degree", int)
    weights = require(document, "weights", list)
    if not weights or any(isinstance(w, bool) or not isinstance(w, int) for w in weights):
        raise SchemaError("weights", "Field `weights` must be a non-empty list of integers.")
    c = float(parse_rational(require(document, "c"), "c"))
    side_length = float(parse_rational(document.get("side_length", 1.0), "side_length"))
    tau = float(parse_rational(document.get("tau", 1.0), "tau"))

    options = document.get("solver", {})
    if not isinstance(options, dict):
        raise SchemaError("solver", "Field `solver` must be an object.")
    try:
        config = SolverConfig.from_config(options)
    except TypeError as e:
        raise SchemaError("solver", f"Invalid solver options: {e}") from e
    if args.seed is not None:
        config.seed = args.seed

    lattice = TorusLattice(n, side_length)
    if "initial" in document:
        initial_lattice, link, higgs = snapshot_from_json(require(document, "initial", dict))
        if initial_lattice.n != n or link.degree != degree:
            raise SchemaError("initial", "The initial snapshot disagrees with `n` or `degree`.")
    else:
        link, higgs = initial_fields(degree, lattice, weights, tau, config.seed, config.link_noise)

    callbacks = [TraceCSVLogger(args.csv)] if args.csv else []
    link, higgs, report = solve(link, higgs, c, lattice, config, callbacks)

    if args.snapshot:
        write_document(snapshot_to_json(lattice, link, higgs), args.snapshot)
    return {"report": report.to_dict(), "config": config.get_config()}


# === index ===
def parse_group(document: dict) -> Group:
    kind = require(document, "group", str)
    if kind == "circle":
        return Group.circle()
    if kind != "cyclic":
        raise SchemaError("group", f"Field `group` must be 'circle' or 'cyclic', received {kind!r}.")
    return Group(kind, require(document, "m", int), require(document, "l", int))


def run_index(document: dict, args) -> dict:
    group = parse_group(document)
    if "summands" in document:
        summands = []
        for entry in require(document, "summands", list):
            if not isinstance(entry, list) or len(entry) != 3 or not all(isinstance(x, int) for x in entry):
                raise SchemaError("summands", "Every summand must be a list [degree, w_plus, w_minus] of integers.")
            summands.append(Summand(*entry))
        bundle = SplitBundle(tuple(summands), group)
        data = bundle.weight_data()
    else:
        counts = {}
        for key in ("Pp", "Zp", "Np", "Pm", "Zm", "Nm"):
            counts[key] = require(document, key, int) if key in document else 0
        data = WeightData(require(document, "rank", int), require(document, "deg", int), group=group, **counts)
        bundle = data.to_split_bundle()

    closed = index_s1(data) if group.is_circle else index_cyclic(data)
    oracle = index_oracle(bundle)
    result = {"index": closed, "oracle": oracle, "agree": closed == oracle, "weight_data": data.to_json()}
    if data.deg >= 1 and data.moving >= 2:
        result["bubble_bound"] = bubble_codim_check(data)
    return result


# === stability ===
def _candidate(entry) -> SubsheafCandidate:
    if not isinstance(entry, dict):
        raise SchemaError("candidates", "Every candidate must be an object.")
    return SubsheafCandidate(
        require(entry, "rank", int),
        parse_rational(require(entry, "degree"), "degree"),
        tuple(require(entry, "meet_ranks", list)) if "meet_ranks" in entry else (),
    )


def _candidate_json(candidate: SubsheafCandidate) -> dict:
    return {"rank": candidate.rank, "degree": candidate.degree, "meet_ranks": list(candidate.meet_ranks)}


def run_stability(document: dict, args) -> dict:
    steps = []
    entries = document.get("steps", [])
    if not isinstance(entries, list):
        raise SchemaError("steps", f"Field `steps` holds {entries!r}, expected a list of [rank, degree] pairs.")
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError("steps", f"Field `steps` holds {entry!r}, expected a pair [rank, degree].")
        if isinstance(entry[0], bool) or not isinstance(entry[0], int):
            raise SchemaError("steps", f"Field `steps` holds the rank {entry[0]!r}, not an integer.")
        steps.append((entry[0], parse_rational(entry[1], "steps")))
    spec = FiltrationSpec(
        require(document, "R", int),
        parse_rational(require(document, "degV"), "degV"),
        tuple(steps),
        tuple(parse_rational(t, "taus") for t in document.get("taus", [])),
        parse_rational(document.get("vol", 1), "vol"),
    )
    candidates = [_candidate(entry) for entry in require(document, "candidates", list)]
    verdict = is_stable(spec, candidates)
    return {
        "stable": verdict.stable,
        "c": verdict.c,
        "worst": _candidate_json(verdict.worst) if verdict.worst is not None else None,
        "worst_slope": verdict.worst_slope,
        "slopes": [tau_slope(spec, candidate) for candidate in candidates],
        "bogomolov": bogomolov_filtration(spec, parse_rational(document.get("ch2", 0), "ch2")),
    }


# === weights ===
def _times(document):
    ts = document.get("t")
    if ts is None:
        return []
    ts = ts if isinstance(ts, list) else [ts]
    return [float(parse_rational(t, "t")) for t in ts]


def _weighted_point(document, mode) -> WeightedPoint:
    coords = [parse_complex(x, "coords") for x in require(document, "coords", list)]
    weights = [parse_rational(w, "weights") for w in require(document, "weights", list)]
    return WeightedPoint(coords, weights, mode)


def _grassmann(document) -> dict:
    plane = [[parse_complex(x, "plane") for x in row] for row in require(document, "plane", list)]
    flags = []
    for entry in require(document, "eigen_flags", list):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError("eigen_flags", "Every flag entry must be a pair [eigenvalue, basis].")
        value, basis = entry
        flags.append((parse_rational(value, "eigen_flags"), [[parse_complex(x, "eigen_flags") for x in row] for row in basis]))
    g = GrassData(len(plane), plane, flags, parse_rational(document.get("tau", 1), "tau"))
    result = {"value": max_weight_grassmann(g)}
    curve = [[t, lambda_t_grassmann(g, t)] for t in _times(document)]
    if curve:
        result["lambda_t_curve"] = curve
    return result


def run_weights(document: dict, args) -> dict:
    mode = require(document, "mode", str)
    if mode == "grassmann":
        return _grassmann(document)
    if mode == "s2":
        coords = [parse_complex(x, "coords") for x in require(document, "coords", list)]
        if len(coords) != 2:
            raise SchemaError("coords", "A point of S^2 needs two homogeneous coordinates.")
        direction = document.get("direction", "+i")
        return {"value": max_weight_s2(coords, direction), "moment": moment_s2(coords)}

    p = _weighted_point(document, mode)
    if mode == "linear":
        return {"value": max_weight_linear(p).to_json()}

    result = {"value": max_weight_projective(p).to_json(), "moment": moment_pairing_projective(p)}
    curve = [[t, lambda_t_projective(p, t)] for t in _times(document)]
    if curve:
        result["lambda_t_curve"] = curve
    if "s_scale" in document:
        result["psi"] = psi_projective(p, float(parse_rational(document["s_scale"], "s_scale")))._asdict()
    if "c" in document:
        c = float(parse_rational(document["c"], "c"))
        kempf_ness = {"stable": is_analytically_stable(p, c)}
        if kempf_ness["stable"]:
            found = kempf_ness_find_zero(p, c)
            kempf_ness.update(t=found.t, residual=found.residual, iterations=found.iterations, point=list(found.point))
        result["kempf_ness"] = kempf_ness
    return result


# === example-s2 ===
def run_example_s2(document: dict, args) -> dict:
    B = ClassB(require(document, "p", int), require(document, "q", int)).require_simple()
    vol = parse_rational(document.get("vol", 1), "vol")
    c_pairing = parse_rational(document.get("c", "1/2"), "c")
    degrees = document.get("degrees", [B.p - B.q - 1, B.p - B.q, B.p - B.q + 1, 0])
    return {
        "dimension": moduli_dimension(B),
        "invariant": invariant_phibar(B),
        "tangent_pairing": pair_with_B(tangent_class(), B),
        "window_examples": window_examples(vol, c_pairing, degrees),
    }


COMMANDS = {
    "solve": run_solve,
    "index": run_index,
    "stability": run_stability,
    "weights": run_weights,
    "example-s2": run_example_s2,
}
