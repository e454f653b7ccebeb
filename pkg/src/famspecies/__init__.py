"""Species of families of subsets: eventual, filters, self-Aso, inner/outer.

Exact computations over finite universes and eventually-periodic subsets of N.
"""

from .foundations import INF, FiniteMap, Universe, extnat, extnat_max, extnat_min, extnat_sum
from .families import Family, aso, classify
from .multifamilies import MultiFamily, MultiSet, inn_hull, out_core
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INF",
    "Family",
    "FiniteMap",
    "MultiFamily",
    "MultiSet",
    "Universe",
    "aso",
    "classify",
    "extnat",
    "extnat_max",
    "extnat_min",
    "extnat_sum",
    "inn_hull",
    "out_core",
]
