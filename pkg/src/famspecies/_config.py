"""Runtime switches.

``FAMSPECIES_DISABLE_NUMBA=1`` forces the pure-numpy kernels even when numba
is importable. Read once, at import of :mod:`famspecies.kernels`.
"""

import os

ENV_FLAG = "FAMSPECIES_DISABLE_NUMBA"


def numba_requested() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def numba_available() -> bool:
    try:
        import numba  # noqa: F401  (availability probe)
    except ImportError:
        return False
    return True


#: finite multiplicities live in [0, CAP]; anything above saturates to INF
CAP = 2**32 - 1
#: int64 code used for INF inside value tables
INF_CODE = CAP + 1
#: mask arithmetic limit
MAX_UNIVERSE = 16
#: exhaustive family enumeration limit (2**16 families at n=4)
MAX_ENUM = 4
