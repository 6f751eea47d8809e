try:
    import keras
except ImportError as e:
    raise ImportError(
        "The keras package is not installed. It can be installed using 'pip install keras'."
    ) from e

from packaging import version

MIN_KERAS_VERSION = "3.0.0"

if version.parse(keras.__version__) < version.parse(MIN_KERAS_VERSION):
    raise ImportError(
        f"vortexlab requires keras>={MIN_KERAS_VERSION}, found keras=={keras.__version__}. "
        "Upgrade with 'pip install -U keras'."
    )

__version__ = "0.3.0"

from . import config  # noqa: E402  (sets floatx before any array is built)
from . import errors  # noqa: E402
