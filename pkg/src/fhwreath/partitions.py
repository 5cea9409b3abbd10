"""Integer partitions, partition-valued class functions, and composition counts."""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import (
    DegreeMismatch,
    NotContained,
    RangeTooLarge,
    TooShort,
    UnknownClass,
)


class Partition(tuple):
    """A partition in canonical form: weakly decreasing positive parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        cleaned = sorted((int(p) for p in parts), reverse=True)
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        if cleaned and cleaned[-1] < 0:
            raise ValueError(f"negative part in {parts!r}")
        return super().__new__(cls, cleaned)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def mult(self, i: int) -> int:
        """Number of parts equal to i."""
        return sum(1 for p in self if p == i)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def contains(self, other: Iterable[int]) -> bool:
        mine = self.multiplicities()
        for p, m in Partition(other).multiplicities().items():
            if mine.get(p, 0) < m:
                return False
        return True

    def subtract(self, other: Iterable[int]) -> "Partition":
        other = Partition(other)
        if not self.contains(other):
            raise NotContained(f"{other} is not a sub-multiset of {self}")
        remaining = list(self)
        for p in other:
            remaining.remove(p)
        return Partition(remaining)

    def add_part(self, part: int) -> "Partition":
        return Partition(tuple(self) + (part,))

    def dominates(self, other: "Partition") -> bool:
        """Standard dominance order; both partitions must have the same size."""
        other = Partition(other)
        if self.size != other.size:
            raise DegreeMismatch(f"|{self}| = {self.size} != {other.size} = |{other}|")
        acc_a = acc_b = 0
        for i in range(max(len(self), len(other))):
            acc_a += self[i] if i < len(self) else 0
            acc_b += other[i] if i < len(other) else 0
            if acc_a < acc_b:
                return False
        return True

    def __repr__(self) -> str:
        return f"Partition{tuple(self)}"


def z_of(lam: Partition) -> int:
    """Product i^{m_i} m_i! over part multiplicities: the centralizer order of a
    permutation of cycle type lam inside the symmetric group on |lam| letters."""
    out = 1
    for part, m in Partition(lam).multiplicities().items():
        out *= part ** m * factorial(m)
    return out


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All distinct sub-multisets of lam, the empty partition included."""
    items = sorted(Partition(lam).multiplicities().items())
    choices = [[(part, k) for k in range(m + 1)] for part, m in items]
    for combo in itertools.product(*choices):
        parts: list[int] = []
        for part, k in combo:
            parts.extend([part] * k)
        yield Partition(parts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in canonical order (largest first part first)."""
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


class ClassPartitionMap(Mapping):
    """A partition-valued function on conjugacy-class indices, stored sparsely.

    Empty partitions are never stored, so equality and hashing see the
    canonical form only.
    """

    __slots__ = ("entries",)

    def __init__(self, data: Mapping[int, Iterable[int]] | Iterable[tuple[int, Iterable[int]]] = ()):
        if isinstance(data, Mapping):
            items = data.items()
        else:
            items = data
        cleaned = []
        seen = set()
        for cls_index, parts in items:
            cls_index = int(cls_index)
            if cls_index < 0:
                raise UnknownClass(cls_index)
            if cls_index in seen:
                raise ValueError(f"duplicate class index {cls_index}")
            seen.add(cls_index)
            p = Partition(parts)
            if p:
                cleaned.append((cls_index, p))
        object.__setattr__(self, "entries", tuple(sorted(cleaned)))

    def __setattr__(self, name, value):
        raise AttributeError("ClassPartitionMap is immutable")

    @staticmethod
    def single(r: int, cls_index: int) -> "ClassPartitionMap":
        """The map with the single part r at the given class (empty if r = 0)."""
        if r == 0:
            return ClassPartitionMap()
        return ClassPartitionMap({cls_index: (r,)})

    def get_partition(self, cls_index: int) -> Partition:
        for c, p in self.entries:
            if c == cls_index:
                return p
        return Partition()

    # Mapping interface -------------------------------------------------
    def __getitem__(self, cls_index: int) -> Partition:
        return self.get_partition(cls_index)

    def __iter__(self) -> Iterator[int]:
        return (c for c, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, cls_index) -> bool:
        return any(c == cls_index for c, _ in self.entries)

    # ---------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return sum(p.size for _, p in self.entries)

    @property
    def length(self) -> int:
        return sum(p.length for _, p in self.entries)

    def length_at(self, cls_index: int) -> int:
        return self.get_partition(cls_index).length

    def classes(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.entries)

    def union(self, other: "ClassPartitionMap") -> "ClassPartitionMap":
        data = {c: p for c, p in self.entries}
        for c, p in other.entries:
            data[c] = data.get(c, Partition()).union(p)
        return ClassPartitionMap(data)

    def contains(self, other: "ClassPartitionMap") -> bool:
        return all(self.get_partition(c).contains(p) for c, p in other.entries)

    def subtract(self, other: "ClassPartitionMap") -> "ClassPartitionMap":
        data = {c: p for c, p in self.entries}
        for c, p in other.entries:
            data[c] = data.get(c, Partition()).subtract(p)
        return ClassPartitionMap(data)

    def add_part(self, cls_index: int, part: int) -> "ClassPartitionMap":
        data = {c: p for c, p in self.entries}
        data[cls_index] = data.get(cls_index, Partition()).add_part(part)
        return ClassPartitionMap(data)

    def remove_parts(self, cls_index: int, parts: Partition) -> "ClassPartitionMap":
        data = {c: p for c, p in self.entries}
        data[cls_index] = data.get(cls_index, Partition()).subtract(parts)
        return ClassPartitionMap(data)

    def single_cycle(self) -> tuple[int, int] | None:
        """Return (r, class) when the map is a single part, else None."""
        if len(self.entries) == 1 and self.entries[0][1].length == 1:
            c, p = self.entries[0]
            return p[0], c
        return None

    def to_dict(self) -> dict[int, list[int]]:
        return {c: list(p) for c, p in self.entries}

    def __eq__(self, other) -> bool:
        if isinstance(other, ClassPartitionMap):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}: {tuple(p)}" for c, p in self.entries)
        return "{" + inner + "}"


def big_Z(rho: ClassPartitionMap, zeta: Iterable[int]) -> int:
    """Centralizer order of an element of (full) type rho in the wreath product
    on ||rho|| points: the product of z_{rho(c)} * zeta_c^{length of rho(c)}."""
    zeta = tuple(zeta)
    out = 1
    for c, p in rho.entries:
        if c >= len(zeta):
            raise UnknownClass(c)
        out *= z_of(p) * zeta[c] ** p.length
    return out


def pfn_order_ge(mu: ClassPartitionMap, lam: ClassPartitionMap, identity_class: int = 0) -> bool:
    """Whether mu >= lam in the triangularity relation on equal-degree maps:
    either mu at the identity class is a proper sub-multiset of lam's, or all
    class degrees agree and mu(c) dominates lam(c) for each class c."""
    if mu.degree != lam.degree:
        raise DegreeMismatch(f"degree {mu.degree} != {lam.degree}")
    mu0 = mu.get_partition(identity_class)
    lam0 = lam.get_partition(identity_class)
    if lam0.contains(mu0) and mu0 != lam0:
        return True
    all_classes = set(mu.classes()) | set(lam.classes())
    for c in all_classes:
        if mu.get_partition(c).size != lam.get_partition(c).size:
            return False
    return all(mu.get_partition(c).dominates(lam.get_partition(c)) for c in all_classes)


def padded(mu: Partition, r: int) -> Partition:
    """Add 1 to every part of mu and pad with 1s so the result has r parts."""
    mu = Partition(mu)
    if r < mu.length:
        raise TooShort(f"need r >= {mu.length}, got {r}")
    return Partition([p + 1 for p in mu] + [1] * (r - mu.length))


_MAX_COMPOSITION_PARTS = 10


@lru_cache(maxsize=None)
def _avoid_counts(padded_parts: tuple[int, ...], s: int) -> int:
    """Number of distinct arrangements of the multiset padded_parts whose
    proper prefix sums never hit s.  Prefix sums increase strictly, so once a
    prefix exceeds s every completion of the remaining multiset is valid."""
    counts: dict[int, int] = {}
    for p in padded_parts:
        counts[p] = counts.get(p, 0) + 1

    def perm_count(cnts: dict[int, int]) -> int:
        total = sum(cnts.values())
        out = factorial(total)
        for m in cnts.values():
            out //= factorial(m)
        return out

    def walk(prefix: int) -> int:
        if prefix == s:
            return 0
        if prefix > s:
            return perm_count(counts)
        if not any(counts.values()):
            return 1
        total = 0
        for v in sorted(counts):
            if counts[v] == 0:
                continue
            counts[v] -= 1
            total += walk(prefix + v)
            counts[v] += 1
        return total

    return walk(0)


def p_count(mu: Partition, r: int, s: int) -> int:
    """Distinct compositions of the padded partition of mu into r parts whose
    proper partial sums avoid s."""
    mu = Partition(mu)
    if s <= 0:
        raise ValueError(f"s must be positive, got {s}")
    if r > _MAX_COMPOSITION_PARTS:
        raise RangeTooLarge(f"composition enumeration capped at r <= {_MAX_COMPOSITION_PARTS}")
    tilde = padded(mu, r)
    if not 0 < s < mu.size + r:
        return 0
    return _avoid_counts(tuple(tilde), s)


def q_count(mu: Partition, r: int, s: int) -> int:
    """Like p_count but counting arrangements of labeled parts (with multiplicity)."""
    mu = Partition(mu)
    base = p_count(mu, r, s)
    scale = factorial(r - mu.length)
    for m in mu.multiplicities().values():
        scale *= factorial(m)
    return scale * base


def pfns_of_degree(num_classes: int, degree: int) -> Iterator[ClassPartitionMap]:
    """All partition-valued functions on num_classes classes of total degree."""
    if num_classes == 0:
        if degree == 0:
            yield ClassPartitionMap()
        return

    def split(remaining: int, cls_index: int) -> Iterator[list[tuple[int, Partition]]]:
        if cls_index == num_classes - 1:
            for p in partitions_of(remaining):
                yield [(cls_index, p)] if p else []
            return
        for here in range(remaining + 1):
            for p in partitions_of(here):
                head = [(cls_index, p)] if p else []
                for tail in split(remaining - here, cls_index + 1):
                    yield head + tail

    for items in split(degree, 0):
        yield ClassPartitionMap(items)


def pfns_up_to_degree(num_classes: int, max_degree: int) -> Iterator[ClassPartitionMap]:
    for d in range(max_degree + 1):
        yield from pfns_of_degree(num_classes, d)
