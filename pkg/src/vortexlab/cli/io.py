"""
Reading configs and writing results of the command line tool.

"""

import json
import os
import sys
from fractions import Fraction

import numpy as np

from ..errors import SchemaError


def read_document(source=None):
    """
    Parse a JSON config given inline, as a file path, or on stdin.

    Parameters
    ----------
    source : str, optional
        Inline JSON or a path. `None` or `"-"` reads stdin.

    Returns
    -------
    document : dict
        The parsed object.

    Raises
    ------
    json.JSONDecodeError
        For malformed input; the caller reports line and column.
    SchemaError
        If the top level is not an object.

    """

    if source is None or source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source, "r") as f:
            text = f.read()
    else:
        text = source

    document = json.loads(text) if text.strip() else {}
    if not isinstance(document, dict):
        raise SchemaError("<root>", "The config must be a JSON object.")
    return document


def canonical_json(document) -> str:
    """Sorted keys and compact separators, the form that is hashed."""
    return json.dumps(to_jsonable(document), sort_keys=True, separators=(",", ":"))


def to_jsonable(x):
    """Recursively convert fractions and numpy scalars; integral fractions become ints, others `"p/q"`."""
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, np.ndarray):
        return to_jsonable(x.tolist())
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def write_document(document, out=None):
    """Write `document` as indented JSON to `out`, or stdout when `out` is `None`."""
    text = json.dumps(to_jsonable(document), indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w") as f:
        f.write(text)


def require(document: dict, key: str, kind=None):
    """Fetch a mandatory field, raising `SchemaError` naming it when absent or mistyped."""
    if key not in document:
        raise SchemaError(key)
    value = document[key]
    if kind is not None and (isinstance(value, bool) or not isinstance(value, kind)):
        raise SchemaError(key, f"Field `{key}` has type {type(value).__name__}.")
    return value


def parse_rational(value, key):
    """Ints stay ints, `"p/q"` strings become fractions, floats stay floats."""
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise SchemaError(key, f"Field `{key}` holds {value!r}, not a number.")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as e:
            raise SchemaError(key, f"Field `{key}` holds {value!r}, not a number.") from e
    return value


def parse_complex(value, key="coords"):
    """A JSON number or a `[re, im]` pair; integer parts stay exact."""
    if not isinstance(value, list):
        return parse_rational(value, key)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        if value[1] == 0:
            return value[0]
        return complex(value[0], value[1])
    raise SchemaError(key, f"Field `{key}` holds {value!r}, expected a number or a [re, im] pair.")
