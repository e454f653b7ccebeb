"""Multi-sets and multi-families with values in {0, 1, ..., INF}.

Values are stored densely as int64 codes (INF -> ``INF_CODE``); the public
accessors hand back extended naturals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .families import Family
from .foundations import (
    INF,
    INF_CODE,
    ExtNat,
    FiniteMap,
    Mask,
    Universe,
    as_mask,
    decode,
    encode,
    extnat,
    extnat_sum,
)


def _frozen(codes) -> np.ndarray:
    a = np.array(codes, dtype=np.int64)
    if a.size and (a.min() < 0 or a.max() > INF_CODE):
        raise ValueError("value codes out of range")
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class MultiFamily:
    universe: Universe
    codes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "codes", _frozen(self.codes))
        if self.codes.shape != (self.universe.size,):
            raise ValueError(f"need exactly {self.universe.size} values")

    @classmethod
    def from_values(cls, universe: Universe, values: Iterable[ExtNat]) -> "MultiFamily":
        return cls(universe, encode(values))

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping) -> "MultiFamily":
        """Values for the listed sets, 0 elsewhere. Keys are masks or label tuples."""
        codes = np.zeros(universe.size, dtype=np.int64)
        for S, v in mapping.items():
            codes[as_mask(universe, S)] = encode([v])[0]
        return cls(universe, codes)

    @classmethod
    def constant(cls, universe: Universe, value: ExtNat) -> "MultiFamily":
        return cls(universe, np.full(universe.size, encode([value])[0], dtype=np.int64))

    def __getitem__(self, S) -> ExtNat:
        return decode(self.codes[as_mask(self.universe, S)])

    def values(self) -> list[ExtNat]:
        return [decode(c) for c in self.codes]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiFamily):
            return NotImplemented
        return self.universe == other.universe and bool((self.codes == other.codes).all())

    def __le__(self, other: "MultiFamily") -> bool:
        return bool((self.codes <= other.codes).all())

    def __ge__(self, other: "MultiFamily") -> bool:
        return bool((self.codes >= other.codes).all())

    def __hash__(self):
        return hash((self.universe, self.codes.tobytes()))

    def __repr__(self) -> str:
        vals = ", ".join("inf" if v == INF else str(v) for v in self.values())
        return f"MultiFamily({list(self.universe.labels)}: [{vals}])"


@dataclass(frozen=True, eq=False)
class MultiSet:
    universe: Universe
    codes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "codes", _frozen(self.codes))
        if self.codes.shape != (self.universe.n,):
            raise ValueError(f"need exactly {self.universe.n} multiplicities")

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping[str, ExtNat]) -> "MultiSet":
        codes = np.zeros(universe.n, dtype=np.int64)
        for x, v in mapping.items():
            codes[universe.index(x)] = encode([v])[0]
        return cls(universe, codes)

    def __getitem__(self, label: str) -> ExtNat:
        return decode(self.codes[self.universe.index(label)])

    def as_dict(self) -> dict[str, ExtNat]:
        return {x: decode(c) for x, c in zip(self.universe.labels, self.codes)}

    def support(self) -> Mask:
        return sum(1 << i for i, c in enumerate(self.codes) if c > 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSet):
            return NotImplemented
        return self.universe == other.universe and bool((self.codes == other.codes).all())

    def __ge__(self, other: "MultiSet") -> bool:
        return bool((self.codes >= other.codes).all())

    def __hash__(self):
        return hash((self.universe, self.codes.tobytes()))

    def __repr__(self) -> str:
        return f"MultiSet({self.as_dict()})"


# -- basic predicates and dualities -----------------------------------------

def is_increasing(M: MultiFamily) -> bool:
    return bool(kernels.increasing(M.codes[None, :])[0])


def is_decreasing(M: MultiFamily) -> bool:
    return bool(kernels.increasing(M.codes[None, ::-1].copy())[0])


def indicator_of_family(F: Family) -> MultiFamily:
    return MultiFamily(F.universe, F.table.astype(np.int64))


def family_of_indicator(M: MultiFamily) -> Family:
    if not np.isin(M.codes, (0, 1)).all():
        raise ValueError("indicator multi-families take values in {0, 1} only")
    return Family.from_table(M.universe, M.codes == 1)


def co_multifamily(M: MultiFamily) -> MultiFamily:
    """``co M(S) = M(S^c)``."""
    full = M.universe.full
    return MultiFamily(M.universe, M.codes[full ^ np.arange(M.universe.size)])


def _require_increasing(M: MultiFamily, what: str):
    if not is_increasing(M):
        raise ValueError(f"{what} is defined for increasing multi-families only")


# -- outer core and inner hull ----------------------------------------------

def out_core(M: MultiFamily) -> MultiFamily:
    """Largest outer multi-family below ``M``: min over finite covers of the summed values."""
    _require_increasing(M, "the outer core")
    return MultiFamily(M.universe, kernels.out_core(M.codes, INF_CODE))


def inn_hull(M: MultiFamily) -> MultiFamily:
    """Smallest inner multi-family above ``M``: max over finite disjoint decompositions.

    Empty parts count, so any positive value on the empty set makes the hull
    INF everywhere.
    """
    _require_increasing(M, "the inner hull")
    return MultiFamily(M.universe, kernels.inn_hull(M.codes, INF_CODE))


def is_outer(M: MultiFamily) -> bool:
    return out_core(M) == M


def is_inner(M: MultiFamily) -> bool:
    return inn_hull(M) == M


# -- transport ----------------------------------------------------------------

def push_multifamily(f: FiniteMap, M: MultiFamily) -> MultiFamily:
    if f.domain != M.universe:
        raise ValueError("map domain differs from the multi-family's universe")
    return MultiFamily(f.codomain, M.codes[f.preimage_table()])


def star_multiset(M: MultiFamily) -> MultiSet:
    U = M.universe
    return MultiSet(U, M.codes[[1 << i for i in range(U.n)]])


def multi_image(f: FiniteMap, L: MultiSet) -> MultiSet:
    if f.domain != L.universe:
        raise ValueError("map domain differs from the multi-set's universe")
    out = []
    for j in range(f.codomain.n):
        out.append(extnat_sum(decode(L.codes[i]) for i, t in enumerate(f.images) if t == j))
    return MultiSet(f.codomain, encode(out))


# -- level sets ---------------------------------------------------------------

def upper_level_family(M: MultiFamily, n) -> Family:
    """``{S : M(S) >= n + 1}``; eventual for increasing ``M``."""
    n = extnat(n)
    if n == INF:
        raise ValueError("level threshold must be finite")
    _require_increasing(M, "the upper level family")
    return Family.from_table(M.universe, M.codes >= n + 1)


def lower_level_family(M: MultiFamily, n) -> Family:
    """``{S : M(S) <= n}``."""
    n = extnat(n)
    if n == INF:
        raise ValueError("level threshold must be finite")
    return Family.from_table(M.universe, M.codes <= n)
