"""JIT switch.

Kernels are written once in the numba-compatible subset.  They are compiled
with ``numba.njit`` unless ``TWELVEREP_PURE=1`` is set (or numba is missing),
in which case the identical functions run as plain Python over numpy arrays.
"""
import os

PURE = os.environ.get("TWELVEREP_PURE", "").strip().lower() not in ("", "0", "false", "no")

try:
    if PURE:
        raise ImportError("pure path requested")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via TWELVEREP_PURE
    _njit = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f


def backend() -> str:
    return "numba" if HAVE_NUMBA else "python"
