"""Explicit-loop kernels.

Written in the numba nopython subset; :mod:`famspecies.kernels` compiles them
with ``njit`` when numba is enabled. They also run unmodified as plain Python,
which the tests use to cross-check against the vectorized versions.

Conventions shared with :mod:`._vectorized`:

* a family table is a bool row of length ``2**n``; bit ``S`` of the row says
  whether the subset with mask ``S`` is a member; batches are 2-D ``(N, 2**n)``;
* a multi-family is an int64 row of the same length, INF encoded as
  ``inf_code``; every sum saturates at ``inf_code``.
"""

import numpy as np


def upward_closed(tables):
    N, P = tables.shape
    out = np.ones(N, dtype=np.bool_)
    for k in range(N):
        ok = True
        for S in range(P):
            if not tables[k, S]:
                continue
            rest = (P - 1) & ~S
            while rest:
                low = rest & -rest
                if not tables[k, S | low]:
                    ok = False
                    break
                rest ^= low
            if not ok:
                break
        out[k] = ok
    return out


def downward_closed(tables):
    N, P = tables.shape
    out = np.ones(N, dtype=np.bool_)
    for k in range(N):
        ok = True
        for S in range(P):
            if not tables[k, S]:
                continue
            rest = S
            while rest:
                low = rest & -rest
                if not tables[k, S ^ low]:
                    ok = False
                    break
                rest ^= low
            if not ok:
                break
        out[k] = ok
    return out


def aso(tables):
    N, P = tables.shape
    full = P - 1
    out = np.empty_like(tables)
    for k in range(N):
        for S in range(P):
            out[k, S] = not tables[k, full ^ S]
    return out


def meet_closed(tables):
    N, P = tables.shape
    out = np.ones(N, dtype=np.bool_)
    for k in range(N):
        ok = True
        for S in range(P):
            if not tables[k, S]:
                continue
            for T in range(S + 1, P):
                if tables[k, T] and not tables[k, S & T]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


def join_closed(tables):
    N, P = tables.shape
    out = np.ones(N, dtype=np.bool_)
    for k in range(N):
        ok = True
        for S in range(P):
            if not tables[k, S]:
                continue
            for T in range(S + 1, P):
                if tables[k, T] and not tables[k, S | T]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


def has_disjoint_members(tables):
    # S == T allowed: the empty set is disjoint from itself
    N, P = tables.shape
    out = np.zeros(N, dtype=np.bool_)
    for k in range(N):
        found = False
        for S in range(P):
            if not tables[k, S]:
                continue
            for T in range(S, P):
                if S & T == 0 and tables[k, T]:
                    found = True
                    break
            if found:
                break
        out[k] = found
    return out


def upward_core(tables):
    N, P = tables.shape
    out = np.empty_like(tables)
    for k in range(N):
        for S in range(P - 1, -1, -1):
            keep = tables[k, S]
            rest = (P - 1) & ~S
            while keep and rest:
                low = rest & -rest
                keep = out[k, S | low]
                rest ^= low
            out[k, S] = keep
    return out


def antitone_violations(images):
    """Count pairs F <= G (as bit-sets) with images[G] not <= images[F]."""
    C = images.shape[0]
    bad = 0
    for G in range(C):
        ig = images[G]
        F = G
        while True:
            if ig & ~images[F]:
                bad += 1
            if F == 0:
                break
            F = (F - 1) & G
    return bad


def increasing(values):
    N, P = values.shape
    out = np.ones(N, dtype=np.bool_)
    for k in range(N):
        ok = True
        for S in range(P):
            rest = (P - 1) & ~S
            while rest:
                low = rest & -rest
                if values[k, S] > values[k, S | low]:
                    ok = False
                    break
                rest ^= low
            if not ok:
                break
        out[k] = ok
    return out


def out_core(values, inf_code):
    P = values.shape[0]
    out = values.copy()
    for S in range(1, P):
        low = S & -S
        best = out[S]
        A = (S - 1) & S
        while A:
            if A & low:
                s = out[A] + out[S ^ A]
                if s > inf_code:
                    s = inf_code
                if s < best:
                    best = s
            A = (A - 1) & S
        out[S] = best
    return out


def inn_hull(values, inf_code):
    P = values.shape[0]
    out = values.copy()
    if values[0] > 0:
        # the empty set may be repeated as a part any number of times
        for S in range(P):
            out[S] = inf_code
        return out
    for S in range(1, P):
        low = S & -S
        best = out[S]
        A = (S - 1) & S
        while A:
            if A & low:
                s = out[A] + out[S ^ A]
                if s > inf_code:
                    s = inf_code
                if s > best:
                    best = s
            A = (A - 1) & S
        out[S] = best
    return out


def closure_min(values, opens, inf_code):
    P = values.shape[0]
    out = np.empty_like(values)
    for S in range(P):
        best = inf_code
        for j in range(opens.shape[0]):
            U = opens[j]
            if S & ~U == 0 and values[U] < best:
                best = values[U]
        out[S] = best
    return out


KERNELS = (
    "upward_closed",
    "downward_closed",
    "aso",
    "meet_closed",
    "join_closed",
    "has_disjoint_members",
    "upward_core",
    "antitone_violations",
    "increasing",
    "out_core",
    "inn_hull",
    "closure_min",
)
