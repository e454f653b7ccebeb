"""Extended naturals, finite universes, subset masks and finite maps.

Extended naturals are plain Python values: a non-negative ``int`` up to
:data:`CAP`, or :data:`INF` (``math.inf``), so ordering, ``min``/``max`` and
``inf + n == inf`` come for free. Inside numpy tables INF is the int64 code
:data:`INF_CODE`.

A subset of a universe with ``n`` elements is an ``int`` mask, bit ``i`` set
iff element ``i`` belongs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from ._config import CAP, INF_CODE, MAX_UNIVERSE

INF = math.inf
ExtNat = Union[int, float]
Mask = int

__all__ = [
    "CAP",
    "INF",
    "INF_CODE",
    "ExtNat",
    "Mask",
    "Universe",
    "FiniteMap",
    "extnat",
    "extnat_sum",
    "extnat_min",
    "extnat_max",
    "encode",
    "decode",
    "extnat_to_json",
    "binary_decompositions",
    "popcount",
    "submasks",
    "set_partitions",
    "as_mask",
]


def extnat(value) -> ExtNat:
    """Validate and normalize an extended natural (accepts ``"inf"``)."""
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "∞"):
            return INF
        value = int(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not multiplicities")
    if isinstance(value, float):
        if value == INF:
            return INF
        if not value.is_integer():
            raise ValueError(f"not an extended natural: {value!r}")
        value = int(value)
    if isinstance(value, (int, np.integer)):
        value = int(value)
        if value < 0:
            raise ValueError(f"negative multiplicity {value}")
        if value > CAP:
            raise ValueError(f"finite multiplicity {value} exceeds cap {CAP}")
        return value
    raise TypeError(f"not an extended natural: {value!r}")


def _saturate(total):
    return INF if total > CAP else total


def extnat_sum(values: Iterable[ExtNat]) -> ExtNat:
    total = 0
    for v in values:
        if v == INF:
            return INF
        total += v
    return _saturate(total)


def extnat_min(values: Iterable[ExtNat]) -> ExtNat:
    return min(values, default=INF)


def extnat_max(values: Iterable[ExtNat]) -> ExtNat:
    return max(values, default=0)


def encode(values: Iterable[ExtNat]) -> np.ndarray:
    return np.array([INF_CODE if v == INF else extnat(v) for v in values], dtype=np.int64)


def decode(code) -> ExtNat:
    code = int(code)
    return INF if code >= INF_CODE else code


def extnat_to_json(v: ExtNat):
    return "inf" if v == INF else int(v)


def popcount(mask: Mask) -> int:
    return mask.bit_count()


def submasks(S: Mask) -> Iterator[Mask]:
    """All submasks of ``S``, descending from ``S`` to 0."""
    A = S
    while True:
        yield A
        if A == 0:
            return
        A = (A - 1) & S


def binary_decompositions(S: Mask, mode: str = "cover") -> Iterator[tuple[Mask, Mask]]:
    """Ordered two-part splits of ``S``.

    ``mode="cover"``: all ``(A, B)`` with ``A | B == S`` and neither equal to ``S``.
    ``mode="disjoint"``: all ``(A, S ^ A)`` with both parts nonempty.
    Pairs come out with ``A`` ascending, then ``B`` ascending.
    """
    subs = sorted(submasks(S))
    if mode == "disjoint":
        for A in subs:
            if A and A != S:
                yield A, S ^ A
    elif mode == "cover":
        for A in subs:
            if A == S:
                continue
            for B in subs:
                if B != S and A | B == S:
                    yield A, B
    else:
        raise ValueError(f"unknown mode {mode!r}")


def set_partitions(S: Mask) -> Iterator[list[Mask]]:
    """Partitions of ``S`` into nonempty blocks, via restricted-growth strings."""
    bits = [1 << i for i in range(S.bit_length()) if S >> i & 1]
    if not bits:
        yield []
        return
    k = len(bits)
    rgs = [0] * k
    while True:
        blocks = [0] * (max(rgs) + 1)
        for b, r in zip(bits, rgs):
            blocks[r] |= b
        yield blocks
        # next restricted-growth string: bump the rightmost position that may grow
        i = k - 1
        while i > 0 and rgs[i] > max(rgs[:i]):
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for t in range(i + 1, k):
            rgs[t] = 0


@dataclass(frozen=True)
class Universe:
    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not 1 <= len(labels) <= MAX_UNIVERSE:
            raise ValueError(f"universe size must be in [1, {MAX_UNIVERSE}], got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError("universe labels must be distinct")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """Labels ``a, b, c, ...`` (falling back to ``x0, x1, ...`` past 26)."""
        if n <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))
        return cls(tuple(f"x{i}" for i in range(n)))

    @classmethod
    def tuples(cls, base: "Universe", k: int) -> "Universe":
        """Universe of ``k``-tuples over ``base``, labels like ``"(a,b)"``."""
        return cls(tuple("(" + ",".join(t) + ")" for t in product(base.labels, repeat=k)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        """Number of subsets, ``2**n``."""
        return 1 << len(self.labels)

    @property
    def full(self) -> Mask:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"{label!r} is not in the universe {self.labels}") from None

    def mask(self, labels: Iterable[str]) -> Mask:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def singleton(self, label: str) -> Mask:
        return 1 << self.index(label)

    def members(self, mask: Mask) -> list[str]:
        return [x for i, x in enumerate(self.labels) if mask >> i & 1]

    def complement(self, mask: Mask) -> Mask:
        return self.full ^ mask

    def check_mask(self, mask: Mask) -> Mask:
        if not 0 <= mask <= self.full:
            raise ValueError(f"mask {mask} out of range for a {self.n}-element universe")
        return mask

    def to_json(self):
        return list(self.labels)


@dataclass(frozen=True)
class FiniteMap:
    """A total map between universes, stored as codomain indices."""

    domain: Universe
    codomain: Universe
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.n:
            raise ValueError("map must assign an image to every domain element")
        if any(not 0 <= i < self.codomain.n for i in images):
            raise ValueError("image index outside the codomain")

    @classmethod
    def from_dict(cls, domain: Universe, codomain: Universe, mapping: dict) -> "FiniteMap":
        return cls(domain, codomain, tuple(codomain.index(mapping[x]) for x in domain.labels))

    @classmethod
    def identity(cls, universe: Universe) -> "FiniteMap":
        return cls(universe, universe, tuple(range(universe.n)))

    @classmethod
    def all_maps(cls, domain: Universe, codomain: Universe) -> Iterator["FiniteMap"]:
        for images in product(range(codomain.n), repeat=domain.n):
            yield cls(domain, codomain, images)

    def __call__(self, label: str) -> str:
        return self.codomain.labels[self.images[self.domain.index(label)]]

    def image(self, mask: Mask) -> Mask:
        m = 0
        for i, j in enumerate(self.images):
            if mask >> i & 1:
                m |= 1 << j
        return m

    def fiber(self, j: int) -> Mask:
        return sum(1 << i for i, t in enumerate(self.images) if t == j)

    def preimage(self, mask: Mask) -> Mask:
        m = 0
        for i, j in enumerate(self.images):
            if mask >> j & 1:
                m |= 1 << i
        return m

    def preimage_table(self) -> np.ndarray:
        """``table[T]`` is the preimage mask of ``T`` for every subset ``T`` of the codomain."""
        fibers = [self.fiber(j) for j in range(self.codomain.n)]
        table = np.zeros(self.codomain.size, dtype=np.int64)
        for T in range(1, self.codomain.size):
            low = (T & -T).bit_length() - 1
            table[T] = table[T & (T - 1)] | fibers[low]
        return table

    def to_json(self):
        return {x: self(x) for x in self.domain.labels}


def as_mask(universe: Universe, subset: Union[Mask, Sequence[str]]) -> Mask:
    if isinstance(subset, (int, np.integer)):
        return universe.check_mask(int(subset))
    return universe.mask(subset)
