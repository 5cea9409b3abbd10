"""Cayley-table finite groups and their conjugacy-class data."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import NoIdentity, NotAssociative, NotInvertible

FULL_ASSOC_CHECK_LIMIT = 256
SAMPLED_ASSOC_TRIPLES = 100_000


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    Elements are opaque indices 0..order-1; ``mul[x][y]`` is the product with
    x as the left factor.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def multiply(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def inverse(self, x: int) -> int:
        return self.inv[x]

    def conjugate(self, g: int, x: int) -> int:
        return self.mul[self.mul[g][x]][self.inv[g]]

    def element_order(self, x: int) -> int:
        acc = x
        n = 1
        while acc != self.identity:
            acc = self.mul[acc][x]
            n += 1
        return n

    def is_central(self, x: int) -> bool:
        row = self.mul[x]
        return all(row[y] == self.mul[y][x] for y in range(self.order))

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)


@dataclass(frozen=True, eq=False)
class ClassTable:
    """Conjugacy classes in a fixed deterministic order.

    Class 0 is the identity class; the rest are sorted by (size, minimal
    element index).  ``zeta[c]`` is the centralizer order of any element of
    class c.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    zeta: tuple[int, ...]
    inv_class: tuple[int, ...]
    identity_class: int = 0

    @property
    def count(self) -> int:
        return len(self.classes)

    def size(self, c: int) -> int:
        return len(self.classes[c])

    def representative(self, c: int) -> int:
        return self.classes[c][0]


@dataclass(frozen=True, eq=False)
class RealComplexSplit:
    """Nontrivial self-inverse classes versus classes moved by inversion."""

    real_classes: frozenset[int]
    complex_classes: frozenset[int]
    complex_pairs: tuple[tuple[int, int], ...]


def build_group(
    cayley: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    rng_seed: int = 0,
) -> FiniteGroup:
    """Validate a multiplication table and package it as a FiniteGroup.

    Associativity is checked exhaustively up to order 256 (vectorized) and by
    sampling at least 10^5 random triples above that.
    """
    order = len(cayley)
    if order == 0:
        raise ValueError("empty multiplication table")
    rows = []
    for i, row in enumerate(cayley):
        row = tuple(int(v) for v in row)
        if len(row) != order:
            raise ValueError(f"row {i} has length {len(row)}, expected {order}")
        if any(v < 0 or v >= order for v in row):
            raise ValueError(f"row {i} has entries outside 0..{order - 1}")
        rows.append(row)
    mul = tuple(rows)

    full = set(range(order))
    for i in range(order):
        if set(mul[i]) != full:
            raise NotInvertible(i)
        if {mul[j][i] for j in range(order)} != full:
            raise NotInvertible(i)

    identity = None
    for e in range(order):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(order)):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    inv = [None] * order
    for x in range(order):
        for y in range(order):
            if mul[x][y] == identity:
                if mul[y][x] != identity:
                    raise NotInvertible(x)
                inv[x] = y
                break
        if inv[x] is None:
            raise NotInvertible(x)

    if order <= FULL_ASSOC_CHECK_LIMIT:
        table = np.array(mul, dtype=np.int32)
        left = table[table, :]          # left[a, b, c] = (ab)c
        right = table[:, table]         # right[a, b, c] = a(bc)
        if not np.array_equal(left, right):
            a, b, c = (int(v[0]) for v in np.nonzero(left != right))
            raise NotAssociative((a, b, c))
    else:
        rng = random.Random(rng_seed)
        for _ in range(SAMPLED_ASSOC_TRIPLES):
            a = rng.randrange(order)
            b = rng.randrange(order)
            c = rng.randrange(order)
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise NotAssociative((a, b, c))

    label_tuple = tuple(str(s) for s in labels) if labels is not None else None
    return FiniteGroup(order=order, mul=mul, identity=identity, inv=tuple(inv), labels=label_tuple)


def conjugacy_classes(group: FiniteGroup) -> ClassTable:
    """Conjugation orbits, ordered by (size, minimal element), identity first."""
    seen = [False] * group.order
    orbits: list[tuple[int, ...]] = []
    for x in range(group.order):
        if seen[x]:
            continue
        orbit = set()
        for g in range(group.order):
            orbit.add(group.conjugate(g, x))
        for y in orbit:
            seen[y] = True
        orbits.append(tuple(sorted(orbit)))

    identity_orbit = next(o for o in orbits if group.identity in o)
    rest = sorted((o for o in orbits if o is not identity_orbit), key=lambda o: (len(o), o[0]))
    ordered = [identity_orbit] + rest

    class_of = [0] * group.order
    for c, orbit in enumerate(ordered):
        for x in orbit:
            class_of[x] = c
    zeta = tuple(group.order // len(o) for o in ordered)
    inv_class = tuple(class_of[group.inv[o[0]]] for o in ordered)
    return ClassTable(
        classes=tuple(ordered),
        class_of=tuple(class_of),
        zeta=zeta,
        inv_class=inv_class,
    )


def real_complex_split(group: FiniteGroup, table: ClassTable) -> RealComplexSplit:
    """Split the nontrivial classes into self-inverse and inversion-paired ones."""
    real = set()
    cx = set()
    pairs = []
    for c in range(table.count):
        cbar = table.inv_class[c]
        if c == cbar:
            if c != table.identity_class:
                real.add(c)
        else:
            cx.add(c)
            if c < cbar:
                pairs.append((c, cbar))
    return RealComplexSplit(
        real_classes=frozenset(real),
        complex_classes=frozenset(cx),
        complex_pairs=tuple(sorted(pairs)),
    )


# -- ready-made small groups ---------------------------------------------------

def trivial_group() -> FiniteGroup:
    return build_group([[0]], labels=["1"])


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"A^{i}" if i > 1 else "A" for i in range(1, n)]
    return build_group(table, labels=labels[:n])


def symmetric_group(n: int) -> FiniteGroup:
    """The symmetric group on n letters, elements in lexicographic order."""
    if n < 1:
        raise ValueError("need n >= 1")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            composed = tuple(p[q[i]] for i in range(n))
            row.append(index[composed])
        table.append(row)
    labels = ["".join(map(str, p)) for p in perms]
    return build_group(table, labels=labels)
