"""Numba switch.

Set ``SEGRECUBE_NUMBA=0`` (or ``false``/``off``/``no``) before import to force the
pure-numpy kernels. If numba cannot be imported the numpy path is used silently.
"""
import os

JIT_OPTIONS = {
    "nogil": True,
    "cache": True,
}

_OFF = {"0", "false", "off", "no"}


def _requested():
    return os.environ.get("SEGRECUBE_NUMBA", "1").strip().lower() not in _OFF


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _requested()


def njit(func):
    """Compile ``func`` with numba when available, else return it unchanged."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(**JIT_OPTIONS)(func)
