import os
import keras


FLOATX = "float64"
THREADS_ENV = "VORTEXLAB_THREADS"

keras.config.set_floatx(FLOATX)


def threads() -> int:
    """
    Number of worker threads granted to data-parallel sweeps.

    Reads `VORTEXLAB_THREADS`. Unset, empty or `0` means one worker per CPU.

    Returns
    -------
    n : int
        Positive number of workers.

    Raises
    ------
    ValueError
        If the variable is not a non-negative integer.

    """

    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return os.cpu_count() or 1

    try:
        n = int(raw)
    except ValueError as e:
        raise ValueError(f"`{THREADS_ENV}` must be a non-negative integer, received {raw!r}.") from e

    if n < 0:
        raise ValueError(f"`{THREADS_ENV}` must be a non-negative integer, received {n}.")
    if n == 0:
        return os.cpu_count() or 1
    return n
