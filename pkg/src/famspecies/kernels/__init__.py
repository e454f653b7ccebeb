"""Hot kernels with a numba path and a pure-numpy path.

The numba path compiles the loop kernels in :mod:`._loops`; the numpy path
uses :mod:`._vectorized`. Selection happens once at import time, see
:mod:`famspecies._config`. ``BACKEND`` names the active one.
"""

from .. import _config
from . import _loops, _vectorized

__all__ = ["BACKEND", "get_backend", *_loops.KERNELS]


def _compile_loops():
    import numba

    ns = {}
    for name in _loops.KERNELS:
        ns[name] = numba.njit(cache=True, nogil=True)(getattr(_loops, name))
    return ns


def get_backend(name):
    """Kernel namespace for ``"numba"``, ``"numpy"`` or ``"python"`` (uncompiled loops)."""
    if name == "numba":
        return _compile_loops()
    if name == "numpy":
        return {k: getattr(_vectorized, k) for k in _loops.KERNELS}
    if name == "python":
        return {k: getattr(_loops, k) for k in _loops.KERNELS}
    raise ValueError(f"unknown kernel backend {name!r}")


if _config.numba_requested() and _config.numba_available():
    BACKEND = "numba"
else:
    BACKEND = "numpy"

globals().update(get_backend(BACKEND))
