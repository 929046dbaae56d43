"""Y-monomials and the bipartite initial seed for the level-one subcategory in type A."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cluster import ExchangeMatrix
from .errors import ClusterError

Key = tuple[int, int]


def cartan_entry(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


@dataclass(frozen=True)
class YMonomial:
    """Laurent monomial in the variables Y[i, a] (node i, integer q-power a)."""

    exps: tuple[tuple[Key, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Key, int] | Iterable[tuple[Key, int]]) -> "YMonomial":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[Key, int] = {}
        for key, e in items:
            acc[key] = acc.get(key, 0) + e
        return cls(tuple(sorted((k, e) for k, e in acc.items() if e)))

    @classmethod
    def y(cls, i: int, a: int, e: int = 1) -> "YMonomial":
        return cls.of({(i, a): e})

    def as_dict(self) -> dict[Key, int]:
        return dict(self.exps)

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        return YMonomial.of(list(self.exps) + list(other.exps))

    def __pow__(self, k: int) -> "YMonomial":
        return YMonomial.of([(key, k * e) for key, e in self.exps])

    def inverse(self) -> "YMonomial":
        return self ** -1

    def __truediv__(self, other: "YMonomial") -> "YMonomial":
        return self * other.inverse()

    def is_one(self) -> bool:
        return not self.exps

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return " ".join(f"Y[{i},{a}]" + (f"^{e}" if e != 1 else "") for (i, a), e in self.exps)


def a_monomial(n: int, i: int, a: int) -> YMonomial:
    """A[i, a] = Y[i, a+1] Y[i, a-1] times Y[j, a]^-1 for each neighbour j."""
    if not 1 <= i <= n:
        raise ClusterError(f"node {i} is not in 1..{n}")
    parts = [((i, a + 1), 1), ((i, a - 1), 1)]
    parts += [((j, a), cartan_entry(j, i)) for j in (i - 1, i + 1) if 1 <= j <= n]
    return YMonomial.of(parts)


@dataclass(frozen=True)
class C1Seed:
    n: int
    xi: tuple[int, ...]
    vars: tuple[YMonomial, ...]
    B: ExchangeMatrix

    @property
    def source_nodes(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self.xi[i - 1] == 0]


def coloring(n: int, xi1: int = 0) -> tuple[int, ...]:
    if xi1 not in (0, 1):
        raise ClusterError("the colour of node 1 must be 0 or 1")
    return tuple((xi1 + i) % 2 for i in range(n))


def build_c1_seed(n: int, xi1: int = 0) -> C1Seed:
    """Initial seed on 2n variables; ``xi1`` is the colour of node 1."""
    if n < 1:
        raise ClusterError(f"rank must be positive, got {n}")
    xi = coloring(n, xi1)
    sources = {i for i in range(1, n + 1) if xi[i - 1] == 0}
    vars = [YMonomial.y(i, xi[i - 1] + 2) for i in range(1, n + 1)]
    vars += [YMonomial.y(i, xi[i - 1]) * YMonomial.y(i, xi[i - 1] + 2) for i in range(1, n + 1)]
    rows = [[0] * n for _ in range(2 * n)]
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if i != j:
                rows[i - 1][j - 1] = (-1) ** xi[j - 1] * cartan_entry(i, j)
        rows[n + j - 1][j - 1] = -1
        if j in sources:
            for k in range(1, n + 1):
                if k != j:
                    rows[n + k - 1][j - 1] = -cartan_entry(k, j)
    return C1Seed(n, xi, tuple(vars), ExchangeMatrix.from_rows(rows, n))


def yhat_monomial(seed: C1Seed, j: int) -> YMonomial:
    out = YMonomial()
    for i, v in enumerate(seed.vars, start=1):
        b = seed.B[i, j]
        if b:
            out = out * v ** b
    return out


def verify_hl_compat(seed: C1Seed) -> bool:
    """Each yhat_j is the inverse of A[j, xi_j + 1]."""
    return all(
        yhat_monomial(seed, j) == a_monomial(seed.n, j, seed.xi[j - 1] + 1).inverse()
        for j in range(1, seed.n + 1)
    )


def a_decomposition(n: int, m: YMonomial) -> dict[Key, int] | None:
    """Write ``m`` as a product of A[i, a]^gamma, or None if impossible.

    Peels off the highest q-power: Y[i, P] at the top level can only come
    from A[i, P-1].
    """
    rest = m.as_dict()
    if not rest:
        return {}
    floor = min(a for _, a in rest) + 1
    gamma: dict[Key, int] = {}
    while rest:
        top = max(a for _, a in rest)
        if top - 1 < floor:
            return None
        for (i, a), e in sorted(rest.items()):
            if a != top:
                continue
            if not 1 <= i <= n:
                return None
            gamma[(i, top - 1)] = gamma.get((i, top - 1), 0) + e
            step = a_monomial(n, i, top - 1) ** e
            rest = (YMonomial.of(rest) / step).as_dict()
    return {k: v for k, v in gamma.items() if v}


def nakajima_leq(n: int, m: YMonomial, m2: YMonomial) -> bool:
    """``m <= m2`` iff ``m2 / m`` is a product of A-monomials with nonnegative exponents."""
    gamma = a_decomposition(n, m2 / m)
    return gamma is not None and all(v > 0 for v in gamma.values())
