from .main import main, build_parser
from .manifest import RunManifest, config_hash
from .verify import CHECKS, run_checks
