import argparse
import json
import logging
import sys

from .. import __version__
from ..errors import DomainError
from .commands import COMMANDS
from .io import read_document, write_document
from .manifest import RunManifest
from .verify import CHECKS, run_checks, format_table

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vortexlab",
        description="Lattice vortices and exact calculators for weights, stability, indices and the S^2 invariant.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, help_text in (
        ("solve", "minimize the Yang-Mills-Higgs energy on the torus"),
        ("index", "equivariant index of weight data or a split bundle"),
        ("stability", "slope stability of a filtered bundle"),
        ("weights", "maximal weights, moment maps and Kempf-Ness zeros"),
        ("example-s2", "moduli dimension and invariant of the sphere target"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--json", default=None, help="inline JSON or path; stdin when omitted")
        sub.add_argument("--out", default=None, help="result path; stdout when omitted")
        sub.add_argument("--seed", type=int, default=None, help="overrides the config seed")
        if name == "solve":
            sub.add_argument("--csv", default=None, help="per-iteration trace")
            sub.add_argument("--snapshot", default=None, help="final field snapshot")
        if name == "example-s2":
            sub.add_argument("--p", type=int, default=None)
            sub.add_argument("--q", type=int, default=None)

    verify = subparsers.add_parser("verify", help="run the acceptance checks")
    verify.add_argument("--only", action="append", choices=sorted(CHECKS), default=None, help="repeatable")
    verify.add_argument("--out", default=None, help="JSON table path")
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else (logging.INFO if verbosity == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)


def _load(args) -> dict:
    if args.command == "example-s2" and args.p is not None and args.q is not None:
        return {"p": args.p, "q": args.q}
    return read_document(args.json)


def main(argv=None) -> int:
    """
    Entry point of the `vortexlab` console script.

    Returns
    -------
    code : int
        0 on success, 1 on malformed input or a domain error, 2 on a usage error.

    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(args.verbose)

    if args.command == "verify":
        rows = run_checks(args.only)
        print(format_table(rows))
        if args.out:
            write_document({"checks": rows}, args.out)
        return 0 if all(row["passed"] for row in rows) else 1

    try:
        document = _load(args)
        result = COMMANDS[args.command](document, args)
    except json.JSONDecodeError as e:
        print(f"error: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}", file=sys.stderr)
        return 1
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    seed = args.seed if args.seed is not None else document.get("seed", result.get("config", {}).get("seed", 0))
    outputs = [args.out] + [getattr(args, key, None) for key in ("csv", "snapshot")]
    result["manifest"] = RunManifest.for_config(args.command, document, seed, outputs).to_dict()
    write_document(result, args.out)
    return 0
