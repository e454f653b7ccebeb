"""Finite topological spaces, closures and limits of (multi-)families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .families import Family, condition_i, is_eventual, star
from .foundations import INF_CODE, FiniteMap, Mask, Universe, as_mask
from .multifamilies import MultiFamily, MultiSet, _require_increasing, star_multiset


class TheoremViolation(RuntimeError):
    """Raised when a checked statement turns out false on a concrete instance."""


@dataclass(frozen=True)
class FiniteTopology:
    universe: Universe
    opens: frozenset

    def __post_init__(self):
        object.__setattr__(self, "opens", frozenset(int(U) for U in self.opens))
        for U in self.opens:
            self.universe.check_mask(U)

    @classmethod
    def from_sets(cls, universe: Universe, sets) -> "FiniteTopology":
        return cls(universe, frozenset(as_mask(universe, s) for s in sets))

    @cached_property
    def open_array(self) -> np.ndarray:
        a = np.array(sorted(self.opens), dtype=np.int64)
        a.flags.writeable = False
        return a

    @cached_property
    def is_valid(self) -> bool:
        return validate_topology(self)

    def is_open(self, S: Mask) -> bool:
        return S in self.opens

    def neighbourhoods(self, i: int) -> list[Mask]:
        return [U for U in sorted(self.opens) if U >> i & 1]

    def __repr__(self) -> str:
        sets = ["{" + ",".join(self.universe.members(U)) + "}" for U in sorted(self.opens)]
        return f"FiniteTopology({list(self.universe.labels)}: {', '.join(sets)})"


def validate_topology(T: FiniteTopology) -> bool:
    opens = T.opens
    if 0 not in opens or T.universe.full not in opens:
        return False
    return all(U | V in opens and U & V in opens for U in opens for V in opens)


def is_hausdorff(T: FiniteTopology) -> bool:
    _require_valid(T)
    n = T.universe.n
    for i, j in combinations(range(n), 2):
        if not any(
            U & V == 0 for U in T.neighbourhoods(i) for V in T.neighbourhoods(j)
        ):
            return False
    return True


def _require_valid(T: FiniteTopology, on=None):
    if not T.is_valid:
        raise ValueError(f"not a topology: {T!r}")
    if on is not None and on.universe != T.universe:
        raise ValueError("topology and (multi-)family live on different universes")


def discrete(universe: Universe) -> FiniteTopology:
    return FiniteTopology(universe, frozenset(range(universe.size)))


def indiscrete(universe: Universe) -> FiniteTopology:
    return FiniteTopology(universe, frozenset({0, universe.full}))


def sierpinski(universe: Universe) -> FiniteTopology:
    """Opens ∅, {first element}, X."""
    return FiniteTopology(universe, frozenset({0, 1, universe.full}))


def all_topologies(universe: Universe) -> Iterator[FiniteTopology]:
    """Every topology on the universe (29 on three points, 355 on four)."""
    if universe.n > 4:
        raise ValueError("topology enumeration is capped at 4 points")
    full = universe.full
    middle = list(range(1, full))
    for pick in range(1 << len(middle)):
        opens = {0, full} | {m for k, m in enumerate(middle) if pick >> k & 1}
        if all(U | V in opens and U & V in opens for U in opens for V in opens):
            yield FiniteTopology(universe, frozenset(opens))


def is_continuous(f: FiniteMap, T_x: FiniteTopology, T_y: FiniteTopology) -> bool:
    return all(f.preimage(V) in T_x.opens for V in T_y.opens)


# -- families -----------------------------------------------------------------

def closure_family(F: Family, T: FiniteTopology) -> Family:
    """Sets all of whose open supersets are members."""
    _require_valid(T, F)
    opens = sorted(T.opens)
    return Family.from_predicate(
        F.universe, lambda S: all(U in F.members for U in opens if S & ~U == 0)
    )


def limit_set(F: Family, T: FiniteTopology) -> Mask:
    """Points every open neighbourhood of which is a member."""
    _require_valid(T, F)
    return sum(
        1 << i
        for i in range(F.universe.n)
        if all(U in F.members for U in T.neighbourhoods(i))
    )


def is_closed(T: FiniteTopology, S: Mask) -> bool:
    return T.universe.full ^ S in T.opens


def unique_limit_inner(F: Family, T: FiniteTopology) -> Optional[str]:
    """The limit point of an inner eventual family in a Hausdorff space, if any."""
    if not is_eventual(F) or not condition_i(F):
        raise ValueError("expected an inner eventual family")
    if not is_hausdorff(T):
        raise ValueError("expected a Hausdorff topology")
    L = limit_set(F, T)
    points = F.universe.members(L)
    if len(points) > 1:
        raise TheoremViolation(f"inner eventual family with limit points {points}: {F!r}")
    return points[0] if points else None


# -- multi-families -----------------------------------------------------------

def closure_multifamily(M: MultiFamily, T: FiniteTopology) -> MultiFamily:
    """``cl M(S)``: least value of ``M`` over open supersets of ``S``."""
    _require_valid(T, M)
    _require_increasing(M, "the closure")
    return MultiFamily(M.universe, kernels.closure_min(M.codes, T.open_array, INF_CODE))


def multiset_limit(M: MultiFamily, T: FiniteTopology) -> MultiSet:
    """Multiplicity at ``x``: least value of ``M`` over open neighbourhoods of ``x``."""
    _require_valid(T, M)
    _require_increasing(M, "the multi-set limit")
    codes = [min(int(M.codes[U]) for U in T.neighbourhoods(i)) for i in range(M.universe.n)]
    return MultiSet(M.universe, codes)


def multiset_limit_via_star(M: MultiFamily, T: FiniteTopology) -> MultiSet:
    return star_multiset(closure_multifamily(M, T))


def limit_set_via_star(F: Family, T: FiniteTopology) -> Mask:
    return star(closure_family(F, T))
