"""Eventually-periodic subsets of N and sequences into finite universes.

An :class:`EpSet` is a finite 0/1 prefix followed by a 0/1 pattern repeated
forever. Instances are canonical (shortest period, then shortest prefix), so
``==`` is set equality.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .foundations import INF, ExtNat, Mask, Universe
from .multifamilies import MultiFamily, MultiSet
from .foundations import encode
from .topology import FiniteTopology, _require_valid


def _min_period(pattern: list) -> list:
    q = len(pattern)
    for d in range(1, q + 1):
        if q % d == 0 and all(pattern[i] == pattern[i % d] for i in range(q)):
            return pattern[:d]
    return pattern


def _canonical(prefix: Sequence, pattern: Sequence) -> tuple[tuple, tuple]:
    if not pattern:
        raise ValueError("the repeating pattern must be nonempty")
    prefix = list(prefix)
    pattern = _min_period(list(pattern))
    while prefix and prefix[-1] == pattern[-1]:
        prefix.pop()
        pattern = [pattern[-1]] + pattern[:-1]
    return tuple(prefix), tuple(pattern)


def _bits(s) -> tuple[int, ...]:
    if isinstance(s, str):
        if set(s) - {"0", "1"}:
            raise ValueError(f"bit string expected, got {s!r}")
        return tuple(int(c) for c in s)
    return tuple(1 if b else 0 for b in s)


@dataclass(frozen=True)
class EpSet:
    prefix: tuple[int, ...]
    pattern: tuple[int, ...]

    def __post_init__(self):
        prefix, pattern = _canonical(_bits(self.prefix), _bits(self.pattern))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "pattern", pattern)

    @classmethod
    def parse(cls, text: str) -> "EpSet":
        """``"PREFIX:PATTERN"`` or a bare ``"PATTERN"``, e.g. ``"0110:10"``."""
        head, sep, tail = text.strip().partition(":")
        return cls(head, tail) if sep else cls("", head)

    @classmethod
    def finite(cls, elements: Iterable[int]) -> "EpSet":
        els = set(elements)
        if any(e < 0 for e in els):
            raise ValueError("natural numbers only")
        top = max(els, default=-1)
        return cls(tuple(int(i in els) for i in range(top + 1)), (0,))

    @classmethod
    def residues(cls, modulus: int, rs: Iterable[int], start: int = 0) -> "EpSet":
        """``{n >= start : n mod modulus in rs}``."""
        rs = {r % modulus for r in rs}
        return cls((0,) * start, tuple(int((start + i) % modulus in rs) for i in range(modulus)))

    @property
    def p(self) -> int:
        return len(self.prefix)

    @property
    def q(self) -> int:
        return len(self.pattern)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.p:
            return bool(self.prefix[n])
        return bool(self.pattern[(n - self.p) % self.q])

    def bits(self, N: int) -> np.ndarray:
        n = np.arange(N)
        pat = np.array(self.pattern, dtype=bool)
        out = pat[(n - self.p) % self.q]
        if self.p:
            out[: min(self.p, N)] = np.array(self.prefix, dtype=bool)[: min(self.p, N)]
        return out

    def elements_below(self, N: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.bits(N))]

    def to_json(self) -> dict:
        return {"prefix": "".join(map(str, self.prefix)), "pattern": "".join(map(str, self.pattern))}

    def __str__(self) -> str:
        return "".join(map(str, self.prefix)) + ":" + "".join(map(str, self.pattern))


NATURALS = EpSet("", "1")
EMPTY = EpSet("", "0")
EVENS = EpSet("", "10")
ODDS = EpSet("", "01")


def _combine(op: Callable, *sets: EpSet) -> EpSet:
    p = max(s.p for s in sets)
    q = math.lcm(*(s.q for s in sets))
    cols = [s.bits(p + q) for s in sets]
    bits = op(*cols)
    return EpSet(tuple(bits[:p]), tuple(bits[p:]))


def ep_complement(S: EpSet) -> EpSet:
    return EpSet(tuple(1 - b for b in S.prefix), tuple(1 - b for b in S.pattern))


def ep_union(S: EpSet, T: EpSet) -> EpSet:
    return _combine(np.logical_or, S, T)


def ep_intersect(S: EpSet, T: EpSet) -> EpSet:
    return _combine(np.logical_and, S, T)


def ep_difference(S: EpSet, T: EpSet) -> EpSet:
    return _combine(lambda a, b: a & ~b, S, T)


def ep_symmetric_difference(S: EpSet, T: EpSet) -> EpSet:
    return _combine(np.logical_xor, S, T)


def ep_subset(S: EpSet, T: EpSet) -> bool:
    return ep_difference(S, T) == EMPTY


def ep_is_finite(S: EpSet) -> bool:
    return not any(S.pattern)


def ep_is_cofinite(S: EpSet) -> bool:
    return all(S.pattern)


# -- gaps -------------------------------------------------------------------

def gap(S: EpSet) -> ExtNat:
    """limsup of the gaps between consecutive elements; INF for finite sets."""
    if ep_is_finite(S):
        return INF
    p, q = S.p, S.q
    window = S.bits(p + 2 * q)
    best = 0
    for left in range(p, p + q):
        if not window[left]:
            continue
        nxt = left + 1
        while not window[nxt]:
            nxt += 1
        best = max(best, nxt - left - 1)
    return best


def cogap(S: EpSet) -> ExtNat:
    """Gap of the complement: limsup of the run lengths of ``S``; 0 iff ``S`` is finite."""
    return gap(ep_complement(S))


def prose_c(S: EpSet) -> ExtNat:
    """Largest number of integers strictly between consecutive elements, over all of ``S``.

    INF when ``S`` is finite (the trailing gap is unbounded). Kept for comparison
    with :func:`cogap`, which it does not always match.
    """
    if ep_is_finite(S):
        return INF
    els = S.elements_below(S.p + 2 * S.q + 1)
    if len(els) < 2:
        return INF
    return max(b - a - 1 for a, b in zip(els, els[1:]))


def cogap_report(S: EpSet) -> dict:
    g, c = gap(S), cogap(S)
    return {
        "set": S.to_json(),
        "finite": ep_is_finite(S),
        "cofinite": ep_is_cofinite(S),
        "gap": g,
        "cogap": c,
        "out_cogap": out_cogap(S),
        "prose_c": prose_c(S),
    }


# -- the families G (infinite sets) and H (cofinite sets) ------------------------

def in_G(S: EpSet) -> bool:
    return not ep_is_finite(S)


def in_H(S: EpSet) -> bool:
    return ep_is_cofinite(S)


def in_aso_H(S: EpSet) -> bool:
    """Membership in the associate of H: the complement is not cofinite."""
    return not in_H(ep_complement(S))


#: increasing multi-families on N, by name
NAMED: dict[str, Callable[[EpSet], ExtNat]] = {
    "G": lambda S: int(in_G(S)),
    "H": lambda S: int(in_H(S)),
    "cogap": cogap,
    "inn-cogap": lambda S: INF if in_G(S) else 0,
}


def finitely_insensitive_probe(value_fn: Callable[[EpSet], object], S: EpSet, toggles: Iterable[int]) -> bool:
    """Whether ``value_fn`` is unchanged after toggling membership of the listed numbers."""
    changed = ep_symmetric_difference(S, EpSet.finite(toggles))
    return value_fn(S) == value_fn(changed)


# -- outer core and inner hull of coGap -------------------------------------------

def even_odd_split(S: EpSet) -> tuple[EpSet, EpSet]:
    return ep_intersect(S, EVENS), ep_intersect(S, ODDS)


def out_cogap(S: EpSet) -> ExtNat:
    return min(2, cogap(S))


@dataclass(frozen=True)
class CoverSearch:
    target: ExtNat
    best: Optional[ExtNat]
    cover: Optional[tuple[EpSet, ...]]
    explored: int


def bounded_cover_search(S: EpSet, max_parts: int = 3, max_period: int = 12) -> CoverSearch:
    """Look for a cover of ``S`` by at most ``max_parts`` ep-sets whose coGaps sum below
    :func:`out_cogap`.

    Parts share one period ``L`` (a multiple of S's period, at most
    ``max(max_period, q)``). Prefix members go to a single part, which does not
    affect any coGap. Each periodic member of ``S`` is assigned a nonempty set
    of parts; a part holding a periodic member is infinite, so it contributes
    at least 1 and partial assignments are pruned once that count reaches the
    target.
    """
    target = out_cogap(S)
    explored = 0
    if target == 0:
        return CoverSearch(target, None, None, explored)
    found: list = []
    nonempty_choices = list(range(1, 1 << max_parts))
    for L in range(S.q, max(max_period, S.q) + 1, S.q):
        ones = [i for i in range(L) if S.pattern[i % S.q]]
        assign = [0] * len(ones)

        def rec(k: int, used: int):
            nonlocal explored
            explored += 1
            if used.bit_count() >= target:
                return
            if k == len(ones):
                parts = []
                for j in range(max_parts):
                    pat = [0] * L
                    for pos, a in zip(ones, assign):
                        if a >> j & 1:
                            pat[pos] = 1
                    prefix = S.prefix if j == 0 else (0,) * S.p
                    parts.append(EpSet(prefix, tuple(pat)))
                total = sum(cogap(P) for P in parts)
                union = parts[0]
                for P in parts[1:]:
                    union = ep_union(union, P)
                if union == S and total < target:
                    found.append((total, tuple(parts)))
                return
            for choice in nonempty_choices:
                assign[k] = choice
                rec(k + 1, used | choice)

        rec(0, 0)
        if found:
            total, parts = min(found, key=lambda t: t[0])
            return CoverSearch(target, total, parts, explored)
    return CoverSearch(target, None, None, explored)


def inn_cogap_witness(S: EpSet, K: int) -> list[EpSet]:
    """Split an infinite ``S`` into ``K`` disjoint infinite ep-sets.

    The m-th longest-length run of the periodic part goes to part ``m mod K``
    and everything else to part 0, so every part keeps coGap(S) when that is
    finite. A cofinite ``S`` is dealt out element by element instead.
    """
    if K < 1:
        raise ValueError("K must be positive")
    if ep_is_finite(S):
        raise ValueError("the witness needs an infinite set")
    if K == 1:
        return [S]
    p, q = S.p, S.q
    if ep_is_cofinite(S):
        pats = [tuple(int(i % K == j) for i in range(K)) for j in range(K)]
        prefixes = [S.prefix if j == 0 else (0,) * p for j in range(K)]
        return [EpSet(pre, pat) for pre, pat in zip(prefixes, pats)]
    # start the periodic block at a non-member so no run wraps around
    s = next(i for i in range(p, p + q) if i not in S)
    L = q * K
    block = S.bits(s + L)[s:]
    runs, i = [], 0
    while i < L:
        if block[i]:
            j = i
            while j < L and block[j]:
                j += 1
            runs.append((i, j))
            i = j
        else:
            i += 1
    longest = max(b - a for a, b in runs)
    parts = [[0] * L for _ in range(K)]
    m = 0
    for a, b in runs:
        owner = 0
        if b - a == longest:
            owner = m % K
            m += 1
        for t in range(a, b):
            parts[owner][t] = 1
    head = S.bits(s)
    out = []
    for j in range(K):
        prefix = tuple(int(x) for x in head) if j == 0 else (0,) * s
        out.append(EpSet(prefix, tuple(parts[j])))
    return out


# -- sequences ----------------------------------------------------------------------

@dataclass(frozen=True)
class EpSequence:
    universe: Universe
    prefix: tuple[int, ...]
    pattern: tuple[int, ...]

    def __post_init__(self):
        prefix, pattern = _canonical(tuple(int(v) for v in self.prefix), tuple(int(v) for v in self.pattern))
        if any(not 0 <= v < self.universe.n for v in prefix + pattern):
            raise ValueError("sequence value outside the universe")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "pattern", pattern)

    @classmethod
    def from_labels(cls, universe: Universe, prefix: Sequence[str], pattern: Sequence[str]) -> "EpSequence":
        try:
            return cls(universe, tuple(map(universe.index, prefix)), tuple(map(universe.index, pattern)))
        except KeyError as exc:
            raise ValueError(exc.args[0]) from None

    def __getitem__(self, n: int) -> str:
        if n < len(self.prefix):
            return self.universe.labels[self.prefix[n]]
        return self.universe.labels[self.pattern[(n - len(self.prefix)) % len(self.pattern)]]

    def compose(self, f) -> "EpSequence":
        """The sequence ``f(x_n)`` for a :class:`FiniteMap` ``f``."""
        if f.domain != self.universe:
            raise ValueError("map domain differs from the sequence's universe")
        return EpSequence(f.codomain, tuple(f.images[v] for v in self.prefix), tuple(f.images[v] for v in self.pattern))

    def to_json(self) -> dict:
        L = self.universe.labels
        return {
            "universe": list(L),
            "prefix": [L[v] for v in self.prefix],
            "pattern": [L[v] for v in self.pattern],
        }


def seq_preimage(x: EpSequence, S: Mask) -> EpSet:
    """``{n : x_n in S}``."""
    return EpSet(tuple(S >> v & 1 for v in x.prefix), tuple(S >> v & 1 for v in x.pattern))


def _named(name: str) -> Callable[[EpSet], ExtNat]:
    try:
        return NAMED[name]
    except KeyError:
        raise ValueError(f"unknown multi-family on N {name!r}; choose from {sorted(NAMED)}") from None


def seq_push(x: EpSequence, name: str) -> MultiFamily:
    """Push of a named multi-family on N along the sequence, as a multi-family on its universe."""
    value = _named(name)
    return MultiFamily(x.universe, encode([value(seq_preimage(x, S)) for S in range(x.universe.size)]))


def seq_limit(x: EpSequence, T: FiniteTopology, name: str) -> MultiSet:
    """Multiplicity at ``y``: least value of the named family over ``{n : x_n in U}``, U open around ``y``."""
    _require_valid(T)
    if T.universe != x.universe:
        raise ValueError("topology and sequence live on different universes")
    value = _named(name)
    mult = [min(value(seq_preimage(x, U)) for U in T.neighbourhoods(i)) for i in range(x.universe.n)]
    return MultiSet(x.universe, encode(mult))


# -- sampling -------------------------------------------------------------------------

def random_epset(rng: random.Random, max_prefix: int = 8, max_period: int = 12) -> EpSet:
    p = rng.randint(0, max_prefix)
    q = rng.randint(1, max_period)
    density = rng.choice([0.0, 0.2, 0.5, 0.8, 1.0, rng.random()])
    prefix = [int(rng.random() < 0.5) for _ in range(p)]
    pattern = [int(rng.random() < density) for _ in range(q)]
    return EpSet(tuple(prefix), tuple(pattern))


def random_sequence(rng: random.Random, universe: Universe, max_prefix: int = 4, max_period: int = 6) -> EpSequence:
    p = rng.randint(0, max_prefix)
    q = rng.randint(1, max_period)
    n = universe.n
    return EpSequence(universe, tuple(rng.randrange(n) for _ in range(p)), tuple(rng.randrange(n) for _ in range(q)))
