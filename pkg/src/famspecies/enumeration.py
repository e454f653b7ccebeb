"""Enumerators and seeded samplers feeding the sweeps."""

from __future__ import annotations

import random
from typing import Callable, Iterator, Optional

import numpy as np

from ._config import INF_CODE, MAX_ENUM
from .families import Family
from .foundations import Universe
from .multifamilies import MultiFamily

#: value ladder for sampled and exhaustive multi-families
LADDER = (0, 1, 2, INF_CODE)


def _check_n(n: int):
    if not 1 <= n <= MAX_ENUM:
        raise ValueError(f"exhaustive enumeration needs 1 <= n <= {MAX_ENUM}, got {n}")


def family_tables(n: int) -> np.ndarray:
    """Every family on ``n`` points as a ``(2**2**n, 2**n)`` bool table; row ``c`` is code ``c``."""
    _check_n(n)
    P = 1 << n
    codes = np.arange(1 << P, dtype=np.int64)
    return ((codes[:, None] >> np.arange(P)) & 1).astype(bool)


def tables_to_codes(tables: np.ndarray) -> np.ndarray:
    P = tables.shape[1]
    return (tables.astype(np.int64) << np.arange(P)).sum(axis=1)


def monotone_codes(n: int) -> list[int]:
    """Codes of all eventual families on ``n`` points, built recursively.

    An up-set on n points splits along the last point into up-sets ``lo <= hi``
    on n-1 points (sets without it, sets with it).
    """
    if n == 0:
        return [0, 1]
    prev = monotone_codes(n - 1)
    shift = 1 << (n - 1)
    return sorted(lo | (hi << shift) for lo in prev for hi in prev if lo & ~hi == 0)


def enumerate_families(
    n: int,
    species: Optional[Callable[[Family], bool]] = None,
    eventual_only: bool = False,
    universe: Optional[Universe] = None,
) -> Iterator[Family]:
    """All families on ``n`` points in code order, optionally filtered."""
    _check_n(n)
    U = universe or Universe.of_size(n)
    codes = monotone_codes(n) if eventual_only else range(1 << (1 << n))
    for c in codes:
        F = Family.from_code(U, c)
        if species is None or species(F):
            yield F


def monotone_repair(codes: np.ndarray, upward: bool = True) -> np.ndarray:
    """Smallest increasing table above (``upward``) or largest below the given one."""
    out = codes.copy()
    P = len(out)
    b = 1
    while b < P:
        lo = np.arange(P)[(np.arange(P) & b) == 0]
        if upward:
            out[lo | b] = np.maximum(out[lo | b], out[lo])
        else:
            out[lo] = np.minimum(out[lo], out[lo | b])
        b <<= 1
    return out


def random_increasing(rng: random.Random, universe: Universe, ladder=LADDER) -> MultiFamily:
    """A random table over ``ladder``, repaired into an increasing one."""
    raw = np.array([rng.choice(ladder) for _ in range(universe.size)], dtype=np.int64)
    return MultiFamily(universe, monotone_repair(raw, upward=rng.random() < 0.5))


def all_increasing(universe: Universe, ladder=LADDER) -> Iterator[MultiFamily]:
    """Every increasing multi-family with values in ``ladder`` (use on tiny universes)."""
    P = universe.size
    k = len(ladder)
    if k**P > 1 << 20:
        raise ValueError("too many tables to enumerate")
    lad = np.array(ladder, dtype=np.int64)
    for idx in np.ndindex(*(k,) * P):
        codes = lad[list(idx)]
        ok = True
        for S in range(P):
            for b in range(universe.n):
                T = S | (1 << b)
                if codes[S] > codes[T]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield MultiFamily(universe, codes)
