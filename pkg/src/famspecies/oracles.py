"""Brute-force reference computations.

Nothing here touches the DP kernels: covers are enumerated as arbitrary
collections of subsets, decompositions as full set partitions. Exponential in
``2**n``; meant for universes of size <= 3 (covers) or <= 5 (partitions).
"""

from __future__ import annotations

from itertools import combinations_with_replacement

import numpy as np

from .foundations import INF, ExtNat, extnat_max, extnat_min, extnat_sum, set_partitions, submasks
from .multifamilies import MultiFamily


def out_core_bruteforce(M: MultiFamily) -> MultiFamily:
    """Min over every nonempty collection of distinct subsets whose union is ``S``."""
    vals = M.values()
    out = []
    for S in range(M.universe.size):
        subs = sorted(submasks(S))
        best = []
        for pick in range(1, 1 << len(subs)):
            union, parts = 0, []
            for i, A in enumerate(subs):
                if pick >> i & 1:
                    union |= A
                    parts.append(vals[A])
            if union == S:
                best.append(extnat_sum(parts))
        out.append(extnat_min(best))
    return MultiFamily.from_values(M.universe, out)


def inn_hull_bruteforce(M: MultiFamily) -> MultiFamily:
    """Max over every partition of ``S`` into nonempty blocks, empty parts handled apart.

    Each extra empty part adds ``M(∅)``; as collections may be arbitrarily
    long, a positive ``M(∅)`` pushes the supremum to INF.
    """
    vals = M.values()
    empty_bonus = INF if vals[0] > 0 else 0
    out = []
    for S in range(M.universe.size):
        sums = [extnat_sum(vals[b] for b in blocks) for blocks in set_partitions(S)]
        # the empty collection and the collection {∅} both decompose ∅
        if S == 0:
            sums.append(vals[0])
        out.append(extnat_sum([extnat_max(sums), empty_bonus]))
    return MultiFamily.from_values(M.universe, out)


def outer_violation(M: MultiFamily, max_parts: int = 3):
    """First collection of at most ``max_parts`` sets breaking subadditivity, or None."""
    vals = M.values()
    for k in range(1, max_parts + 1):
        for parts in combinations_with_replacement(range(M.universe.size), k):
            union = 0
            for A in parts:
                union |= A
            if vals[union] > extnat_sum(vals[A] for A in parts):
                return parts
    return None


def inner_violation(M: MultiFamily, max_parts: int = 3):
    """First pairwise-disjoint collection breaking superadditivity, or None.

    Repeats are allowed, which only matters for the empty set.
    """
    vals = M.values()
    for k in range(1, max_parts + 1):
        for parts in combinations_with_replacement(range(M.universe.size), k):
            union, ok = 0, True
            for A in parts:
                if union & A:
                    ok = False
                    break
                union |= A
            if ok and vals[union] < extnat_sum(vals[A] for A in parts):
                return parts
    return None



def _window_gap(bits: np.ndarray) -> ExtNat:
    N = len(bits)
    els = np.flatnonzero(bits[N // 2:])
    if len(els) < 2:
        return INF
    return int((np.diff(els) - 1).max())


def gap_windowed(S) -> ExtNat:
    """Gap of an ep-set by simulation: largest gap in the back half of a long window."""
    N = max(1000, S.p + 20 * S.q)
    return _window_gap(S.bits(N))


def cogap_windowed(S) -> ExtNat:
    """coGap by simulation: gaps of the complement, read straight off the membership bits."""
    N = max(1000, S.p + 20 * S.q)
    return _window_gap(~S.bits(N))
