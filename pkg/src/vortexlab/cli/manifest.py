import hashlib
from dataclasses import dataclass, field, asdict
from typing import List

from packaging import version

from .. import __version__
from .io import canonical_json


def config_hash(document: dict) -> str:
    """SHA-256 of the canonical JSON encoding of a config."""
    return hashlib.sha256(canonical_json(document).encode("utf-8")).hexdigest()


def tool_version() -> str:
    return str(version.Version(__version__))


@dataclass
class RunManifest:
    """
    Provenance attached to every result.

    Two runs with the same manifest produce the same numbers.

    """

    subcommand: str
    config_hash: str
    seed: int = 0
    tool_version: str = field(default_factory=tool_version)
    outputs: List[str] = field(default_factory=list)

    @classmethod
    def for_config(cls, subcommand: str, document: dict, seed: int = 0, outputs=()):
        return cls(subcommand, config_hash(document), int(seed), outputs=[str(p) for p in outputs if p])

    def to_dict(self) -> dict:
        return asdict(self)
