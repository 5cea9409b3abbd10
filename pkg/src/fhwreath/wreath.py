"""Elements of wreath products: multiplication, types, degrees, supports,
reduced expressions, and conjugacy-class enumeration.

Positions are 1-based in every public interface (matching cycle notation);
the internal arrays are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import GroupMismatch, NotRealizable, TooSmall
from .groups import ClassTable, FiniteGroup, conjugacy_classes
from .partitions import ClassPartitionMap, Partition, big_Z


@dataclass(frozen=True)
class WreathElement:
    """A pair (g, sigma): colors g in the base group and a permutation sigma,
    stored as 0-based images."""

    n: int
    g: tuple[int, ...]
    sigma: tuple[int, ...]

    def support_1based(self, identity: int = 0) -> frozenset[int]:
        return frozenset(
            i + 1
            for i in range(self.n)
            if self.sigma[i] != i or self.g[i] != identity
        )


@dataclass(frozen=True)
class MarkedTransposition:
    """The order-2 element swapping positions i and j (1-based) that carries
    color g at position j and its inverse at position i."""

    i: int
    j: int
    color: int


@dataclass(frozen=True)
class PointInsertion:
    """A single base-group element placed at one position (1-based)."""

    pos: int
    color: int


Factor = MarkedTransposition | PointInsertion


class WreathGroup:
    """All element-level operations for wreath products over one base group."""

    def __init__(self, group: FiniteGroup, table: ClassTable | None = None):
        self.group = group
        self.table = table if table is not None else conjugacy_classes(group)
        # hot-loop aliases
        self._mul = group.mul
        self._inv = group.inv
        self._e = group.identity
        self._class_of = self.table.class_of

    # -- construction -----------------------------------------------------

    def identity(self, n: int) -> WreathElement:
        return WreathElement(n, (self._e,) * n, tuple(range(n)))

    def element(self, g: Sequence[int], sigma_images: Sequence[int]) -> WreathElement:
        """Build an element from colors and 1-based one-line permutation images."""
        n = len(g)
        if len(sigma_images) != n:
            raise ValueError("colors and permutation must have the same length")
        if any(c < 0 or c >= self.group.order for c in g):
            raise GroupMismatch("color index outside the base group")
        images = tuple(int(v) - 1 for v in sigma_images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"{sigma_images!r} is not a permutation of 1..{n}")
        return WreathElement(n, tuple(int(c) for c in g), images)

    def from_cycles(self, n: int, g: Sequence[int], cycles: Iterable[Sequence[int]]) -> WreathElement:
        """Build an element from colors and disjoint cycles of 1-based positions."""
        images = list(range(n))
        used = set()
        for cycle in cycles:
            for pos in cycle:
                if not 1 <= pos <= n:
                    raise ValueError(f"position {pos} outside 1..{n}")
                if pos in used:
                    raise ValueError(f"position {pos} repeated across cycles")
                used.add(pos)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b - 1
        return self.element(g, [v + 1 for v in images])

    def from_literal(self, data: dict) -> WreathElement:
        """Parse the {"n":..., "g":[...], "sigma":[...]} element literal."""
        n = int(data["n"])
        g = data["g"]
        sigma = data["sigma"]
        if len(g) != n or len(sigma) != n:
            raise ValueError("literal arrays must have length n")
        return self.element(g, sigma)

    def to_literal(self, x: WreathElement) -> dict:
        return {"n": x.n, "g": list(x.g), "sigma": [v + 1 for v in x.sigma]}

    # -- group operations ---------------------------------------------------

    def embed(self, x: WreathElement, n: int) -> WreathElement:
        if n < x.n:
            raise ValueError(f"cannot shrink from {x.n} to {n} points")
        if n == x.n:
            return x
        pad = n - x.n
        return WreathElement(
            n,
            x.g + (self._e,) * pad,
            x.sigma + tuple(range(x.n, n)),
        )

    def multiply(self, x: WreathElement, y: WreathElement) -> WreathElement:
        """(g, sigma)(h, tau): colors g_i * h_{sigma^{-1}(i)}, permutation sigma.tau."""
        n = max(x.n, y.n)
        x = self.embed(x, n)
        y = self.embed(y, n)
        g, s = _raw_mul(self._mul, x.g, x.sigma, y.g, y.sigma)
        return WreathElement(n, g, s)

    def inverse(self, x: WreathElement) -> WreathElement:
        g, s = _raw_inv(self._inv, x.g, x.sigma)
        return WreathElement(x.n, g, s)

    def conjugate(self, z: WreathElement, x: WreathElement) -> WreathElement:
        return self.multiply(self.multiply(z, x), self.inverse(z))

    def product(self, factors: Iterable[WreathElement], n: int) -> WreathElement:
        acc = self.identity(n)
        for f in factors:
            acc = self.multiply(acc, f)
        return acc

    # -- types and degrees ----------------------------------------------------

    def type_of(self, x: WreathElement) -> ClassPartitionMap:
        """Full type: per class, the multiset of cycle lengths whose cycle
        product (taken right-to-left along the cycle) lies in that class."""
        parts = _raw_cycle_parts(self._mul, self._class_of, self._e, x.g, x.sigma, full=True)
        return ClassPartitionMap(parts)

    def modified_type_of(self, x: WreathElement) -> ClassPartitionMap:
        parts = _raw_cycle_parts(self._mul, self._class_of, self._e, x.g, x.sigma, full=False)
        return ClassPartitionMap(parts)

    def degree(self, x: WreathElement) -> int:
        return self.modified_type_of(x).degree

    def support(self, *xs: WreathElement) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for x in xs:
            out |= x.support_1based(self._e)
        return out

    def full_from_modified(self, mu: ClassPartitionMap, n: int) -> ClassPartitionMap:
        """Inverse of the type modification at n points: add 1 to each part at
        the identity class and pad with fixed points."""
        floor = mu.degree + mu.length_at(0)
        if floor > n:
            raise TooSmall(f"type of degree {mu.degree} needs at least {floor} points, got {n}")
        data = {c: p for c, p in mu.entries if c != 0}
        lifted = [p + 1 for p in mu.get_partition(0)] + [1] * (n - mu.degree - mu.length_at(0))
        if lifted:
            data[0] = Partition(lifted)
        return ClassPartitionMap(data)

    def modified_from_full(self, rho: ClassPartitionMap) -> ClassPartitionMap:
        data = {c: p for c, p in rho.entries if c != 0}
        reduced = Partition([p - 1 for p in rho.get_partition(0)])
        if reduced:
            data[0] = reduced
        return ClassPartitionMap(data)

    # -- reduced expressions ---------------------------------------------------

    def factor_element(self, f: Factor, n: int) -> WreathElement:
        if isinstance(f, MarkedTransposition):
            g = [self._e] * n
            g[f.j - 1] = f.color
            g[f.i - 1] = self._inv[f.color]
            images = list(range(n))
            images[f.i - 1] = f.j - 1
            images[f.j - 1] = f.i - 1
            return WreathElement(n, tuple(g), tuple(images))
        g = [self._e] * n
        g[f.pos - 1] = f.color
        return WreathElement(n, tuple(g), tuple(range(n)))

    def reduced_expression(self, x: WreathElement) -> list[Factor]:
        """A minimal-length factorization into marked transpositions and
        one-point insertions, built cycle by cycle.  The number of factors
        equals the degree of x."""
        mul = self._mul
        factors: list[Factor] = []
        seen = [False] * x.n
        for start in range(x.n):
            if seen[start]:
                continue
            cycle = []
            j = start
            while not seen[j]:
                seen[j] = True
                cycle.append(j)
                j = x.sigma[j]
            prod = self._e
            for pos in cycle:
                prod = mul[x.g[pos]][prod]
            for a, b in zip(cycle, cycle[1:]):
                factors.append(MarkedTransposition(a + 1, b + 1, x.g[b]))
            if prod != self._e:
                factors.append(PointInsertion(cycle[-1] + 1, prod))
        return factors

    # -- conjugacy classes in the wreath product -------------------------------

    def is_realizable(self, mu: ClassPartitionMap, n: int) -> bool:
        return mu.degree + mu.length_at(0) <= n

    def class_size(self, n: int, mu: ClassPartitionMap) -> int:
        """Number of elements of modified type mu on n points (0 if unrealizable)."""
        if not self.is_realizable(mu, n):
            return 0
        rho = self.full_from_modified(mu, n)
        total = self.group.order ** n * factorial(n)
        z = big_Z(rho, self.table.zeta)
        assert total % z == 0
        return total // z

    def canonical_representative(self, n: int, mu: ClassPartitionMap) -> WreathElement:
        """Deterministic representative: consecutive blocks per cycle in class
        order with parts descending; the cycle product sits on the block's last
        position as the minimal element of its class."""
        if not self.is_realizable(mu, n):
            raise NotRealizable(f"{mu!r} needs {mu.degree + mu.length_at(0)} points, got {n}")
        rho = self.full_from_modified(mu, n)
        g = [self._e] * n
        images = list(range(n))
        pos = 0
        for c, parts in rho.entries:
            rep = self.table.representative(c)
            for k in parts:
                block = list(range(pos, pos + k))
                for a, b in zip(block, block[1:] + [block[0]]):
                    images[a] = b
                if rep != self._e or c != 0:
                    g[block[-1]] = rep
                pos += k
        return WreathElement(n, tuple(g), tuple(images))

    def enumerate_class(self, n: int, mu: ClassPartitionMap) -> Iterator[WreathElement]:
        """Yield every element of modified type mu on n points exactly once."""
        for g, s in self._enumerate_raw(n, mu):
            yield WreathElement(n, g, s)

    def _enumerate_raw(self, n: int, mu: ClassPartitionMap) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if not self.is_realizable(mu, n):
            return
        single = mu.single_cycle()
        if mu.degree == 0:
            yield (self._e,) * n, tuple(range(n))
        elif single is not None:
            yield from self._enumerate_single_cycle(n, *single)
        else:
            yield from self._enumerate_orbit(n, mu)

    def _enumerate_single_cycle(self, n: int, r: int, c: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Constructive stream for one-cycle types: choose the support, the
        cyclic order, the free colors, and close up the cycle product in c."""
        mul = self._mul
        inv = self._inv
        k = r + 1 if c == 0 else r
        class_elems = self.table.classes[c]
        identity_row = tuple(range(n))
        base_g = (self._e,) * n
        for supp in itertools.combinations(range(n), k):
            first = supp[0]
            for rest in itertools.permutations(supp[1:]):
                cycle = (first,) + rest
                images = list(identity_row)
                for a, b in zip(cycle, rest + (first,)):
                    images[a] = b
                sigma = tuple(images)
                for colors in itertools.product(range(self.group.order), repeat=k - 1):
                    # product of the first k-1 colors along the cycle
                    acc = self._e
                    for col in colors:
                        acc = mul[col][acc]
                    for target in class_elems:
                        g = list(base_g)
                        for posn, col in zip(cycle, colors):
                            g[posn] = col
                        g[cycle[-1]] = mul[target][inv[acc]]
                        yield tuple(g), sigma

    def _enumerate_orbit(self, n: int, mu: ClassPartitionMap) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Breadth-first conjugation orbit from the canonical representative."""
        rep = self.canonical_representative(n, mu)
        conjugators: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for i in range(n - 1):
            images = list(range(n))
            images[i], images[i + 1] = images[i + 1], images[i]
            conjugators.append(((self._e,) * n, tuple(images)))
        for gamma in range(self.group.order):
            if gamma == self._e:
                continue
            colors = (gamma,) + (self._e,) * (n - 1)
            conjugators.append((colors, tuple(range(n))))

        mul = self._mul
        inv = self._inv
        start = (rep.g, rep.sigma)
        seen = {start}
        frontier = [start]
        while frontier:
            new_frontier = []
            for xg, xs in frontier:
                yield xg, xs
                for zg, zs in conjugators:
                    pg, ps = _raw_mul(mul, zg, zs, xg, xs)
                    ig, is_ = _raw_inv(inv, zg, zs)
                    w = _raw_mul(mul, pg, ps, ig, is_)
                    if w not in seen:
                        seen.add(w)
                        new_frontier.append(w)
            frontier = new_frontier


# -- raw kernels (tuples in, tuples out; used by the oracle hot loops) ---------

def _raw_mul(mul, xg, xs, yg, ys):
    n = len(xg)
    rg = [0] * n
    rs = [0] * n
    for j in range(n):
        i = xs[j]
        rg[i] = mul[xg[i]][yg[j]]
        rs[j] = xs[ys[j]]
    return tuple(rg), tuple(rs)


def _raw_inv(inv, xg, xs):
    n = len(xg)
    rg = [0] * n
    rs = [0] * n
    for j in range(n):
        i = xs[j]
        rs[i] = j
        rg[j] = inv[xg[i]]
    return tuple(rg), tuple(rs)


def _raw_cycle_parts(mul, class_of, identity, g, s, full):
    """Cycle lengths grouped by the class of their cycle product.

    With full=False the identity-class parts are decremented (and dropped at
    zero), which is exactly the type modification.
    """
    n = len(g)
    seen = [False] * n
    per_class: dict[int, list[int]] = {}
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        prod = identity
        while not seen[j]:
            seen[j] = True
            prod = mul[g[j]][prod]
            length += 1
            j = s[j]
        c = class_of[prod]
        part = length if (full or c != 0) else length - 1
        if part > 0:
            per_class.setdefault(c, []).append(part)
    return per_class


def _raw_modified_key(mul, class_of, identity, g, s):
    """Canonical hashable modified type: sorted ((class, parts desc), ...)."""
    n = len(g)
    seen = [False] * n
    per_class: dict[int, list[int]] = {}
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        prod = identity
        while not seen[j]:
            seen[j] = True
            prod = mul[g[j]][prod]
            length += 1
            j = s[j]
        c = class_of[prod]
        part = length - 1 if c == 0 else length
        if part > 0:
            per_class.setdefault(c, []).append(part)
    return tuple(
        sorted((c, tuple(sorted(parts, reverse=True))) for c, parts in per_class.items())
    )


def key_to_map(key) -> ClassPartitionMap:
    return ClassPartitionMap({c: parts for c, parts in key})


def map_to_key(mu: ClassPartitionMap):
    return tuple((c, tuple(p)) for c, p in mu.entries)
