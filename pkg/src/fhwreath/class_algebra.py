"""Brute-force convolution oracle for wreath-product class algebras.

Structure constants are computed by enumerating the smaller of the two
factor classes against a fixed representative, which costs O(min class size)
group operations and is exact throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceeded, NotRealizable
from .partitions import ClassPartitionMap, pfns_of_degree, pfns_up_to_degree
from .wreath import WreathGroup, _raw_inv, _raw_modified_key, _raw_mul, key_to_map, map_to_key

DEFAULT_BUDGET = 10**8


class Budget:
    """Counts base-level group multiplications; raises once the limit is hit."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)


@dataclass
class ClassVector:
    """An exact linear combination of class sums of the wreath product on n points."""

    n: int
    coeffs: dict[ClassPartitionMap, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v != 0}

    def coefficient(self, key: ClassPartitionMap) -> int:
        return self.coeffs.get(key, 0)

    def restrict_degree(self, degree: int) -> "ClassVector":
        return ClassVector(self.n, {k: v for k, v in self.coeffs.items() if k.degree == degree})

    def max_degree(self) -> int:
        return max((k.degree for k in self.coeffs), default=0)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other) -> bool:
        if isinstance(other, ClassVector):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        terms = ", ".join(f"{v}*K{k!r}" for k, v in sorted(self.coeffs.items(), key=lambda kv: (kv[0].degree, repr(kv[0]))))
        return f"ClassVector(n={self.n}; {terms or '0'})"


def class_keys(wg: WreathGroup, n: int, degrees: Iterator[int] | None = None) -> list[ClassPartitionMap]:
    """All modified types realizable on n points, optionally restricted to the
    given degrees."""
    out = []
    degree_range = range(n + 1) if degrees is None else degrees
    for d in degree_range:
        for mu in pfns_of_degree(wg.table.count, d):
            if wg.is_realizable(mu, n):
                out.append(mu)
    return out


def _check_realizable(wg: WreathGroup, n: int, mu: ClassPartitionMap) -> None:
    if not wg.is_realizable(mu, n):
        raise NotRealizable(
            f"{mu!r} needs {mu.degree + mu.length_at(0)} points, got {n}"
        )


def _tally_against_representative(
    wg: WreathGroup, n: int, lam: ClassPartitionMap, mu: ClassPartitionMap, budget: Budget
) -> dict:
    """Fix a representative of the larger class, stream the smaller one, and
    tally the modified type of every product.  Returns raw-key -> count for the
    streamed side, together with the fixed side's class size."""
    size_lam = wg.class_size(n, lam)
    size_mu = wg.class_size(n, mu)
    if size_mu <= size_lam:
        fixed, streamed, fixed_size = lam, mu, size_lam
        fixed_on_left = True
    else:
        fixed, streamed, fixed_size = mu, lam, size_mu
        fixed_on_left = False
    rep = wg.canonical_representative(n, fixed)
    mul = wg._mul
    class_of = wg._class_of
    e = wg._e
    tally: dict = {}
    count = 0
    for g, s in wg._enumerate_raw(n, streamed):
        if fixed_on_left:
            pg, ps = _raw_mul(mul, rep.g, rep.sigma, g, s)
        else:
            pg, ps = _raw_mul(mul, g, s, rep.g, rep.sigma)
        key = _raw_modified_key(mul, class_of, e, pg, ps)
        tally[key] = tally.get(key, 0) + 1
        count += 1
    budget.charge(count * n if n else count)
    return {"tally": tally, "fixed_size": fixed_size}


def _products_from_tally(wg, n, info, targets):
    """Exact coefficients from a tally pass: fixed_size * count / |target class|."""
    out = {}
    for nu in targets:
        count = info["tally"].get(map_to_key(nu), 0)
        if count == 0:
            continue
        pairs = info["fixed_size"] * count
        size_nu = wg.class_size(n, nu)
        assert pairs % size_nu == 0, "pair count not divisible by class size"
        out[nu] = pairs // size_nu
    return out


def convolve(
    wg: WreathGroup,
    n: int,
    lam: ClassPartitionMap,
    mu: ClassPartitionMap,
    budget: Budget | None = None,
) -> ClassVector:
    """The full product of the two class sums on n points."""
    budget = budget or Budget()
    _check_realizable(wg, n, lam)
    _check_realizable(wg, n, mu)
    info = _tally_against_representative(wg, n, lam, mu, budget)
    targets = [key_to_map(k) for k in info["tally"]]
    return ClassVector(n, _products_from_tally(wg, n, info, targets))


def graded_product(
    wg: WreathGroup,
    n: int,
    lam: ClassPartitionMap,
    mu: ClassPartitionMap,
    budget: Budget | None = None,
) -> ClassVector:
    """The top-degree part of convolve: only targets of degree ||lam|| + ||mu||."""
    full = convolve(wg, n, lam, mu, budget)
    return full.restrict_degree(lam.degree + mu.degree)


def structure_constant(
    wg: WreathGroup,
    n: int,
    lam: ClassPartitionMap,
    mu: ClassPartitionMap,
    nu: ClassPartitionMap,
    budget: Budget | None = None,
    representative=None,
) -> int:
    """Coefficient of the nu class sum in the product of lam and mu on n points.

    Fixes one representative z of nu, enumerates the smaller of the two factor
    classes, and counts factorizations of z.
    """
    budget = budget or Budget()
    _check_realizable(wg, n, nu)
    if not wg.is_realizable(lam, n) or not wg.is_realizable(mu, n):
        return 0
    z = representative if representative is not None else wg.canonical_representative(n, nu)
    if wg.class_size(n, lam) > wg.class_size(n, mu):
        lam, mu = mu, lam
    mul = wg._mul
    inv = wg._inv
    class_of = wg._class_of
    e = wg._e
    mu_key = map_to_key(mu)
    count = 0
    seen = 0
    for g, s in wg._enumerate_raw(n, lam):
        ig, is_ = _raw_inv(inv, g, s)
        pg, ps = _raw_mul(mul, ig, is_, z.g, z.sigma)
        if _raw_modified_key(mul, class_of, e, pg, ps) == mu_key:
            count += 1
        seen += 1
    budget.charge(2 * seen * n if n else seen)
    return count


def pair_count_identity_check(
    wg: WreathGroup,
    n: int,
    lam: ClassPartitionMap,
    mu: ClassPartitionMap,
    nu: ClassPartitionMap,
    budget: Budget | None = None,
) -> bool:
    """Exhaustively verify #{(x,y) : xy lands in the nu class} equals the
    structure constant times the nu class size."""
    budget = budget or Budget()
    _check_realizable(wg, n, nu)
    mul = wg._mul
    class_of = wg._class_of
    e = wg._e
    nu_key = map_to_key(nu)
    xs = list(wg._enumerate_raw(n, lam))
    ys = list(wg._enumerate_raw(n, mu))
    budget.charge(len(xs) * len(ys) * max(n, 1))
    pairs = 0
    for xg, xsig in xs:
        for yg, ysig in ys:
            pg, ps = _raw_mul(mul, xg, xsig, yg, ysig)
            if _raw_modified_key(mul, class_of, e, pg, ps) == nu_key:
                pairs += 1
    constant = structure_constant(wg, n, lam, mu, nu, budget)
    return pairs == constant * wg.class_size(n, nu)


def max_pair_support(
    wg: WreathGroup,
    lam: ClassPartitionMap,
    mu: ClassPartitionMap,
    nu: ClassPartitionMap,
    budget: Budget | None = None,
) -> int | None:
    """Largest joint support over factor pairs whose product has type nu, minus
    the support size of the nu class itself.  This is the exact degree of the
    structure-constant polynomial; None when no factorization exists at all."""
    budget = budget or Budget()
    n_star = (lam.degree + lam.length_at(0)) + (mu.degree + mu.length_at(0))
    n_star = max(n_star, nu.degree + nu.length_at(0), 1)
    mul = wg._mul
    class_of = wg._class_of
    e = wg._e
    nu_key = map_to_key(nu)
    xs = list(wg._enumerate_raw(n_star, lam))
    ys = list(wg._enumerate_raw(n_star, mu))
    budget.charge(len(xs) * len(ys) * n_star)
    best = None
    for xg, xsig in xs:
        x_support = {i for i in range(n_star) if xsig[i] != i or xg[i] != e}
        for yg, ysig in ys:
            pg, ps = _raw_mul(mul, xg, xsig, yg, ysig)
            if _raw_modified_key(mul, class_of, e, pg, ps) != nu_key:
                continue
            joint = set(x_support)
            joint.update(i for i in range(n_star) if ysig[i] != i or yg[i] != e)
            if best is None or len(joint) > best:
                best = len(joint)
    if best is None:
        return None
    return best - (nu.degree + nu.length_at(0))
