"""Pure-numpy kernels, same signatures as :mod:`._loops`.

The algorithms differ on purpose where that is cheap (sum-over-subsets passes
instead of per-set descent, popcount layers instead of per-set submask walks),
so agreement between the two backends is a meaningful check.
"""

import numpy as np

_CHUNK = 1 << 20


def _bit_pairs(P):
    """For every bit: (sets without the bit, the same sets with it)."""
    S = np.arange(P)
    pairs = []
    b = 1
    while b < P:
        lo = S[(S & b) == 0]
        pairs.append((lo, lo | b))
        b <<= 1
    return pairs


def upward_closed(tables):
    ok = np.ones(tables.shape[0], dtype=bool)
    for lo, hi in _bit_pairs(tables.shape[1]):
        ok &= ~(tables[:, lo] & ~tables[:, hi]).any(axis=1)
    return ok


def downward_closed(tables):
    ok = np.ones(tables.shape[0], dtype=bool)
    for lo, hi in _bit_pairs(tables.shape[1]):
        ok &= ~(tables[:, hi] & ~tables[:, lo]).any(axis=1)
    return ok


def aso(tables):
    P = tables.shape[1]
    return ~tables[:, (P - 1) ^ np.arange(P)]


def _pair_closed(tables, combine):
    N, P = tables.shape
    S = np.arange(P)
    idx = combine(S[:, None], S[None, :])
    ok = np.ones(N, dtype=bool)
    step = max(1, _CHUNK // (P * P))
    for i in range(0, N, step):
        t = tables[i:i + step]
        bad = t[:, :, None] & t[:, None, :] & ~t[:, idx]
        ok[i:i + step] = ~bad.reshape(len(t), -1).any(axis=1)
    return ok


def meet_closed(tables):
    return _pair_closed(tables, np.bitwise_and)


def join_closed(tables):
    return _pair_closed(tables, np.bitwise_or)


def has_disjoint_members(tables):
    P = tables.shape[1]
    S = np.arange(P)
    s_idx, t_idx = np.nonzero((S[:, None] & S[None, :]) == 0)
    return (tables[:, s_idx] & tables[:, t_idx]).any(axis=1)


def upward_core(tables):
    core = tables.copy()
    for lo, hi in _bit_pairs(tables.shape[1]):
        core[:, lo] &= core[:, hi]
    return core


def _deposit(j, masks, k):
    """Scatter the low k bits of each ``j`` onto the set bits of each mask."""
    out = np.zeros((len(masks), len(j)), dtype=np.int64)
    rem = masks.astype(np.int64).copy()
    for b in range(k):
        low = rem & -rem
        out |= ((j >> b) & 1)[None, :] * low[:, None]
        rem ^= low
    return out


def _comparable_pairs(bits: int):
    """All pairs ``F <= G`` over ``bits`` bits: each bit is in neither, only G, or both."""
    F = np.zeros(1, dtype=np.int64)
    G = np.zeros(1, dtype=np.int64)
    for b in range(bits):
        bit = np.int64(1 << b)
        F = np.concatenate([F, F, F | bit])
        G = np.concatenate([G, G | bit, G | bit])
    return F, G


def antitone_violations(images):
    images = np.asarray(images, dtype=np.int64)
    B = len(images).bit_length() - 1
    low = min(B, 10)
    F_low, G_low = _comparable_pairs(low)
    F_high, G_high = _comparable_pairs(B - low)
    bad = 0
    for fh, gh in zip(F_high << low, G_high << low):
        bad += int(np.count_nonzero(images[G_low | gh] & ~images[F_low | fh]))
    return bad


def increasing(values):
    ok = np.ones(values.shape[0], dtype=bool)
    for lo, hi in _bit_pairs(values.shape[1]):
        ok &= (values[:, lo] <= values[:, hi]).all(axis=1)
    return ok


def _layer_dp(values, inf_code, reduce):
    P = values.shape[0]
    n = P.bit_length() - 1
    out = values.copy()
    S_all = np.arange(P, dtype=np.int64)
    pop = np.array([int(s).bit_count() for s in range(P)])
    for k in range(2, n + 1):
        layer = S_all[pop == k]
        # submask codes containing the lowest bit, excluding the full mask
        j = np.arange(1, (1 << k) - 1, 2, dtype=np.int64)
        rows = max(1, _CHUNK // len(j))
        for i in range(0, len(layer), rows):
            Ss = layer[i:i + rows]
            A = _deposit(j, Ss, k)
            s = np.minimum(out[A] + out[Ss[:, None] ^ A], inf_code)
            out[Ss] = reduce(out[Ss], reduce.reduce(s, axis=1))
    return out


def out_core(values, inf_code):
    return _layer_dp(values, inf_code, np.minimum)


def inn_hull(values, inf_code):
    if values[0] > 0:
        return np.full_like(values, inf_code)
    return _layer_dp(values, inf_code, np.maximum)


def closure_min(values, opens, inf_code):
    P = values.shape[0]
    S = np.arange(P, dtype=np.int64)
    opens = np.asarray(opens, dtype=np.int64)
    vo = values[opens]
    out = np.empty_like(values)
    rows = max(1, _CHUNK // max(1, len(opens)))
    for i in range(0, P, rows):
        s = S[i:i + rows]
        inside = (s[:, None] & ~opens[None, :]) == 0
        out[i:i + rows] = np.where(inside, vo[None, :], inf_code).min(axis=1, initial=inf_code)
    return out
