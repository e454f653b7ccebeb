"""Families of subsets of a finite universe and their species.

A :class:`Family` is an immutable set of subset masks. Predicates go through
the batch kernels in :mod:`famspecies.kernels` with a one-row table, so the
same code serves single families and the exhaustive sweeps.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .foundations import FiniteMap, Mask, Universe, as_mask, set_partitions


@dataclass(frozen=True)
class Family:
    universe: Universe
    members: frozenset

    def __post_init__(self):
        members = frozenset(int(m) for m in self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            self.universe.check_mask(m)

    @classmethod
    def from_sets(cls, universe: Universe, sets: Iterable) -> "Family":
        return cls(universe, frozenset(as_mask(universe, s) for s in sets))

    @classmethod
    def from_table(cls, universe: Universe, table) -> "Family":
        table = np.asarray(table, dtype=bool)
        if table.shape != (universe.size,):
            raise ValueError(f"table must have length {universe.size}")
        return cls(universe, frozenset(int(i) for i in np.flatnonzero(table)))

    @classmethod
    def from_predicate(cls, universe: Universe, pred: Callable[[Mask], bool]) -> "Family":
        return cls(universe, frozenset(S for S in range(universe.size) if pred(S)))

    @classmethod
    def from_code(cls, universe: Universe, code: int) -> "Family":
        """Family whose member masks are the set bits of ``code``."""
        return cls(universe, frozenset(S for S in range(universe.size) if code >> S & 1))

    @cached_property
    def table(self) -> np.ndarray:
        t = np.zeros(self.universe.size, dtype=bool)
        t[list(self.members)] = True
        t.flags.writeable = False
        return t

    @property
    def code(self) -> int:
        return sum(1 << S for S in self.members)

    def __contains__(self, S) -> bool:
        return as_mask(self.universe, S) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "Family") -> bool:
        _same_universe(self, other)
        return self.members <= other.members

    def __repr__(self) -> str:
        sets = ["{" + ",".join(self.universe.members(S)) + "}" for S in self]
        return f"Family({list(self.universe.labels)}: {', '.join(sets) or '∅'})"


def _same_universe(F: Family, G: Family):
    if F.universe != G.universe:
        raise ValueError("families live on different universes")


def _row(F: Family) -> np.ndarray:
    return F.table[None, :]


# -- named families ---------------------------------------------------------

def all_subsets(universe: Universe) -> Family:
    return Family(universe, frozenset(range(universe.size)))


def empty_family(universe: Universe) -> Family:
    return Family(universe, frozenset())


def principal(universe: Universe, label: str) -> Family:
    """The fixed ultrafilter of all sets containing ``label``."""
    bit = universe.singleton(label)
    return Family.from_predicate(universe, lambda S: bool(S & bit))


def at_least(universe: Universe, k: int) -> Family:
    return Family.from_predicate(universe, lambda S: S.bit_count() >= k)


def majority(universe: Universe) -> Family:
    """Sets holding more than half of the elements (self-Aso when ``n`` is odd)."""
    return at_least(universe, universe.n // 2 + 1)


# -- species predicates -----------------------------------------------------

def is_eventual(F: Family) -> bool:
    return bool(kernels.upward_closed(_row(F))[0])


def is_co_eventual(F: Family) -> bool:
    return bool(kernels.downward_closed(_row(F))[0])


def complement_family(F: Family) -> Family:
    """All subsets that are *not* members."""
    return Family.from_table(F.universe, ~F.table)


def family_of_complements(F: Family) -> Family:
    full = F.universe.full
    return Family(F.universe, frozenset(full ^ S for S in F.members))


def aso(F: Family) -> Family:
    """Associate: the sets whose complement is not a member."""
    return Family.from_table(F.universe, kernels.aso(_row(F))[0])


def is_self_aso(F: Family) -> bool:
    return bool((kernels.aso(_row(F))[0] == F.table).all())


def is_filter(F: Family) -> bool:
    """Eventual and closed under pairwise intersection (no properness required)."""
    row = _row(F)
    return bool(kernels.upward_closed(row)[0] and kernels.meet_closed(row)[0])


def is_proper(F: Family) -> bool:
    return 0 not in F.members and len(F.members) > 0


def is_ultrafilter(F: Family) -> bool:
    return is_filter(F) and is_self_aso(F)


def _require_eventual(F: Family, what: str):
    if not is_eventual(F):
        raise ValueError(f"{what} is defined for eventual families only")


def condition_o(F: Family) -> bool:
    """(O): the union of two non-members is a non-member."""
    _require_eventual(F, "condition (O)")
    return bool(kernels.join_closed(~_row(F))[0])


def condition_i(F: Family) -> bool:
    """(I): no two disjoint members."""
    _require_eventual(F, "condition (I)")
    return not bool(kernels.has_disjoint_members(_row(F))[0])


def eventual_core(F: Family) -> Family:
    """Largest eventual subfamily: sets all of whose supersets are members."""
    return Family.from_table(F.universe, kernels.upward_core(_row(F))[0])


def star(F: Family) -> Mask:
    """Mask of the points whose singleton is a member."""
    return sum(1 << i for i in range(F.universe.n) if (1 << i) in F.members)


def push_family(f: FiniteMap, F: Family) -> Family:
    if f.domain != F.universe:
        raise ValueError("map domain differs from the family's universe")
    return Family.from_table(f.codomain, F.table[f.preimage_table()])


def connectives(F: Family) -> dict[str, bool]:
    """Which of the connectives NOT, AND, OR, IMPLIES, TRUE, FALSE carry over to ``F``.

    Computed straight from the set-level statements, independent of the
    species predicates above.
    """
    U = F.universe
    full, t = U.full, F.table
    Ss = range(U.size)
    return {
        "I": all(t[full ^ S] == (not t[S]) for S in Ss),
        "II": all(t[S & T] == (t[S] and t[T]) for S in Ss for T in Ss),
        "III": all(t[S | T] == (t[S] or t[T]) for S in Ss for T in Ss),
        "IV": all(t[T] for S in Ss if t[S] for T in Ss if S & T == S),
        "V": bool(t[full]),
        "VI": not t[0],
    }


@dataclass(frozen=True)
class SpeciesReport:
    eventual: bool
    co_eventual: bool
    filter: bool
    ultrafilter: bool
    self_aso: bool
    condition_o: Optional[bool]
    condition_i: Optional[bool]
    finitely_additive: Optional[bool]
    proper: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["condition_O"] = d.pop("condition_o")
        d["condition_I"] = d.pop("condition_i")
        return d


def classify(F: Family) -> SpeciesReport:
    """All species flags; the (O)/(I) flags are ``None`` for non-eventual families."""
    ev = is_eventual(F)
    o = condition_o(F) if ev else None
    i = condition_i(F) if ev else None
    return SpeciesReport(
        eventual=ev,
        co_eventual=is_co_eventual(F),
        filter=is_filter(F),
        ultrafilter=is_ultrafilter(F),
        self_aso=is_self_aso(F),
        condition_o=o,
        condition_i=i,
        finitely_additive=(o and i) if ev else None,
        proper=is_proper(F),
    )


def species_flags(tables: np.ndarray) -> dict[str, np.ndarray]:
    """Batch version of :func:`classify` over a ``(N, 2**n)`` bool table."""
    ev = kernels.upward_closed(tables)
    co = kernels.downward_closed(tables)
    meet = kernels.meet_closed(tables)
    sa = (kernels.aso(tables) == tables).all(axis=1)
    o = kernels.join_closed(~tables) & ev
    i = ~kernels.has_disjoint_members(tables) & ev
    filt = ev & meet
    return {
        "eventual": ev,
        "co_eventual": co,
        "filter": filt,
        "proper_filter": filt & ~tables[:, 0] & tables.any(axis=1),
        "ultrafilter": filt & sa,
        "self_aso": sa,
        "self_aso_eventual": sa & ev,
        "outer": o,
        "inner": i,
        "finitely_additive": o & i,
    }


# -- partitions and the filter criterion for self-Aso families --------------

def _require_self_aso_eventual(F: Family):
    if not (is_eventual(F) and is_self_aso(F)):
        raise ValueError("expected a self-Aso eventual family")


@dataclass(frozen=True)
class PartitionVerdict:
    parts: tuple[int, ...]
    measured: bool
    witness_part: Optional[int]


def _check_partition(universe: Universe, parts: Sequence[Mask]):
    seen = 0
    for p in parts:
        if p & seen:
            raise ValueError("parts are not pairwise disjoint")
        seen |= p
    if seen != universe.full:
        raise ValueError("parts do not cover the universe")


def partition_verdict(F: Family, parts: Sequence) -> PartitionVerdict:
    _require_self_aso_eventual(F)
    masks = tuple(as_mask(F.universe, p) for p in parts)
    _check_partition(F.universe, masks)
    for k, p in enumerate(masks):
        if p in F.members:
            return PartitionVerdict(masks, True, k)
    return PartitionVerdict(masks, False, None)


@dataclass(frozen=True)
class FltReport:
    additive: bool
    no_nonmeasured: bool
    no_nonmeasured_3: bool
    filter: bool

    @property
    def consistent(self) -> bool:
        return len({self.additive, self.no_nonmeasured, self.no_nonmeasured_3, self.filter}) == 1


def prop_flt_report(F: Family) -> FltReport:
    """Evaluate the four equivalent conditions for a self-Aso eventual family, separately."""
    _require_self_aso_eventual(F)
    U, t = F.universe, F.table
    Ss = range(U.size)
    additive = all(
        int(t[S | T]) == int(t[S]) + int(t[T]) for S in Ss for T in Ss if S & T == 0
    )
    no_nonmeasured = all(
        any(t[p] for p in parts) for parts in set_partitions(U.full)
    )
    # three-part partitions may have empty parts: label every point 0, 1 or 2
    no_nonmeasured_3 = True
    for labels in product(range(3), repeat=U.n):
        parts = [0, 0, 0]
        for i, lab in enumerate(labels):
            parts[lab] |= 1 << i
        if not any(t[p] for p in parts):
            no_nonmeasured_3 = False
            break
    filt = all(t[S & T] for S in Ss if t[S] for T in Ss if t[T])
    return FltReport(additive, no_nonmeasured, no_nonmeasured_3, filt)


# -- restriction and extension ----------------------------------------------

def _embedding(sub: Universe, sup: Universe) -> list[int]:
    return [sup.index(x) for x in sub.labels]


def _lift(mask: Mask, positions: list[int]) -> Mask:
    return sum(1 << positions[i] for i in range(len(positions)) if mask >> i & 1)


def restrict_to(F: Family, Q) -> Family:
    """View a self-Aso family on one of its members ``Q``, forgetting the rest."""
    Q = as_mask(F.universe, Q)
    if not is_self_aso(F):
        raise ValueError("restriction needs a self-Aso family")
    if Q not in F.members:
        raise ValueError("the restricting set must be a member")
    sub = Universe(tuple(F.universe.members(Q)))
    pos = _embedding(sub, F.universe)
    return Family.from_predicate(sub, lambda S: _lift(S, pos) in F.members)


def extend_from(Fq: Family, universe: Universe) -> Family:
    """``{S : S ∩ Q in Fq}`` on the larger universe, ``Q`` being Fq's universe."""
    pos = _embedding(Fq.universe, universe)
    # project a mask of the big universe onto Q coordinates
    def project(S: Mask) -> Mask:
        return sum(1 << i for i, p in enumerate(pos) if S >> p & 1)

    return Family.from_predicate(universe, lambda S: project(S) in Fq.members)


# -- constructions ----------------------------------------------------------

def product_universe(X: Universe, Y: Universe) -> Universe:
    return Universe(tuple(f"({x},{y})" for x in X.labels for y in Y.labels))


def product_raw(E: Family, F: Family, order: str = "XY") -> Family:
    """Iterated product on X×Y; ``order="XY"`` decides X-slices with E first."""
    X, Y = E.universe, F.universe
    W = product_universe(X, Y)
    nx, ny = X.n, Y.n
    S = np.arange(W.size, dtype=np.int64)

    def bit(i, j):
        return (S >> (i * ny + j)) & 1

    if order == "XY":
        inner = [E.table[sum(bit(i, j) << i for i in range(nx))] for j in range(ny)]
        outer_mask = sum(inner[j].astype(np.int64) << j for j in range(ny))
        table = F.table[outer_mask]
    elif order == "YX":
        inner = [F.table[sum(bit(i, j) << j for j in range(ny))] for i in range(nx)]
        outer_mask = sum(inner[i].astype(np.int64) << i for i in range(nx))
        table = E.table[outer_mask]
    else:
        raise ValueError("order must be 'XY' or 'YX'")
    return Family.from_table(W, table)


def product_self_aso(E: Family, F: Family, order: str = "XY") -> Family:
    _require_self_aso_eventual(E)
    _require_self_aso_eventual(F)
    return product_raw(E, F, order)


def majority_projection(F: Family, base: Universe, length: int) -> Family:
    """Project a family on ``length``-tuples over ``base`` by majority vote."""
    if length % 2 == 0:
        raise ValueError("tuple length must be odd")
    if F.universe != Universe.tuples(base, length):
        raise ValueError("family must live on the tuple universe of the base")
    _require_self_aso_eventual(F)
    need = length // 2 + 1
    tuples = list(product(range(base.n), repeat=length))

    def pred(S: Mask) -> bool:
        T = sum(1 << k for k, t in enumerate(tuples) if sum(S >> i & 1 for i in t) >= need)
        return T in F.members

    return Family.from_predicate(base, pred)
