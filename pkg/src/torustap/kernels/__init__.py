"""Hot numeric kernels.

Each kernel has a numba implementation and a pure-numpy implementation with
identical signatures.  The numba path is used unless the environment variable
``TORUSTAP_DISABLE_NUMBA`` is set to a true value (``1``, ``true``, ``yes``)
or numba cannot be imported.  Both implementations stay importable so tests
and benchmarks can compare them directly.
"""

import os

_FLAG = os.environ.get("TORUSTAP_DISABLE_NUMBA", "").strip().lower()

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _FLAG not in ("1", "true", "yes", "on")
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, identity otherwise."""
    if HAVE_NUMBA:
        from numba import njit as _njit

        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f


def jitable(func):
    """Plain Python function that numba kernels may also call."""
    if HAVE_NUMBA:
        from numba.extending import register_jitable

        return register_jitable(func)
    return func
