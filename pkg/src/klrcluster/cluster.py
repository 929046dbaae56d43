"""Exchange matrices, matrix mutation, quivers and the dominance order."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .errors import ClusterError, RankDeficientError
from .words import Ordering


@dataclass(frozen=True)
class ExchangeMatrix:
    """An m x n integer matrix whose first n rows form a skew-symmetric block.

    Indices are 1-based in the public API; ``rows`` is stored 0-based.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 0 or len(rows) < self.n:
            raise ClusterError(f"need at least n={self.n} rows, got {len(rows)}")
        for r in rows:
            if len(r) != self.n:
                raise ClusterError(f"row {r} does not have {self.n} columns")
        for i in range(self.n):
            for j in range(self.n):
                if rows[i][j] != -rows[j][i]:
                    raise ClusterError("principal part is not skew-symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "ExchangeMatrix":
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows[0]) if rows else 0
        return cls(tuple(tuple(r) for r in rows), n)

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "ExchangeMatrix":
        m = n if m is None else m
        return cls(tuple((0,) * n for _ in range(m)), n)

    @property
    def m(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        self._check_unfrozen(j)
        return tuple(r[j - 1] for r in self.rows)

    def principal(self) -> "ExchangeMatrix":
        return ExchangeMatrix(self.rows[: self.n], self.n)

    def with_principal_coefficients(self) -> "ExchangeMatrix":
        """Principal n x n block stacked on an n x n identity."""
        ident = tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))
        return ExchangeMatrix(self.rows[: self.n] + ident, self.n)

    def rank(self) -> int:
        return exact.rank(self.rows)

    def is_full_rank(self) -> bool:
        return self.rank() == self.n

    def _check_unfrozen(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise ClusterError(f"direction {k} is not an unfrozen index in 1..{self.n}")

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ExchangeMatrix":
        mat = cls.from_rows(data["rows"], data["n"])
        if "m" in data and data["m"] != mat.m:
            raise ClusterError(f"declared m={data['m']} but found {mat.m} rows")
        return mat

    @classmethod
    def from_json(cls, text: str) -> "ExchangeMatrix":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for i, r in enumerate(self.rows):
            body = " ".join(str(x).rjust(width) for x in r)
            lines.append(f"[{body}]" + ("  *" if i >= self.n else ""))
        return "\n".join(lines)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction ``k`` (1-based)."""
    B._check_unfrozen(k)
    kk = k - 1
    old = B.rows
    new = []
    for i, row in enumerate(old):
        out = []
        for j, b in enumerate(row):
            if i == kk or j == kk:
                out.append(-b)
            else:
                bik, bkj = row[kk], old[kk][j]
                out.append(b + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        new.append(tuple(out))
    return ExchangeMatrix(tuple(new), B.n)


def mutate_matrix_sequence(B: ExchangeMatrix, sequence: Iterable[int]) -> ExchangeMatrix:
    for k in sequence:
        B = mutate_matrix(B, k)
    return B


@dataclass(frozen=True)
class Quiver:
    """Vertices ``1..m``; the first ``n`` are mutable, the rest frozen."""

    m: int
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        arrows = tuple(sorted((int(s), int(t)) for s, t in self.arrows))
        object.__setattr__(self, "arrows", arrows)
        if not 0 <= self.n <= self.m:
            raise ClusterError(f"invalid vertex counts n={self.n}, m={self.m}")
        for s, t in arrows:
            if not (1 <= s <= self.m and 1 <= t <= self.m):
                raise ClusterError(f"arrow {s}->{t} leaves the vertex set 1..{self.m}")
            if s == t:
                raise ClusterError(f"loop at vertex {s}")
        pairs = set(arrows)
        for s, t in pairs:
            if (t, s) in pairs and (s <= self.n or t <= self.n):
                raise ClusterError(f"2-cycle between {s} and {t}")

    def is_frozen(self, v: int) -> bool:
        return v > self.n

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for v in range(1, self.m + 1):
            shape = "box" if self.is_frozen(v) else "circle"
            lines.append(f"  {v} [shape={shape}];")
        for (s, t), mult in sorted(Counter(self.arrows).items()):
            label = f" [label={mult}]" if mult > 1 else ""
            lines.append(f"  {s} -> {t}{label};")
        lines.append("}")
        return "\n".join(lines)


def quiver_to_matrix(Q: Quiver) -> ExchangeMatrix:
    """``b_ij`` counts arrows i->j minus arrows j->i; arrows between frozen vertices are dropped."""
    rows = [[0] * Q.n for _ in range(Q.m)]
    for s, t in Q.arrows:
        if t <= Q.n:
            rows[s - 1][t - 1] += 1
        if s <= Q.n:
            rows[t - 1][s - 1] -= 1
    return ExchangeMatrix.from_rows(rows, Q.n)


def matrix_to_quiver(B: ExchangeMatrix) -> Quiver:
    arrows = []
    for i in range(1, B.m + 1):
        for j in range(1, B.n + 1):
            b = B[i, j]
            if i <= B.n and j < i:
                continue  # principal pairs are read once from the upper triangle
            if b > 0:
                arrows += [(i, j)] * b
            elif b < 0:
                arrows += [(j, i)] * (-b)
    return Quiver(B.m, B.n, tuple(arrows))


def yhat_exponents(B: ExchangeMatrix, j: int) -> tuple[int, ...]:
    """Exponent vector of ``yhat_j``: column ``j`` of ``B``."""
    return B.column(j)


def solve_dominance(B: ExchangeMatrix, delta: Sequence[int]) -> tuple[Fraction, ...] | None:
    """The unique rational ``gamma`` with ``B gamma = delta``, or None."""
    if len(delta) != B.m:
        raise ClusterError(f"exponent vector has length {len(delta)}, expected {B.m}")
    if not B.is_full_rank():
        raise RankDeficientError("exchange matrix is rank deficient: dominance is a preorder only")
    return exact.solve(B.rows, delta)


def dominance_compare(B: ExchangeMatrix, alpha: Sequence[int], beta: Sequence[int]) -> Ordering:
    """Compare monomials: ``x^alpha <= x^beta`` iff ``beta = alpha + B gamma`` with ``gamma >= 0``."""
    if len(alpha) != B.m or len(beta) != B.m:
        raise ClusterError(f"exponent vectors must have length {B.m}")
    delta = [b - a for a, b in zip(alpha, beta)]
    gamma = solve_dominance(B, delta)
    if not any(delta):
        return Ordering.EQUAL
    if gamma is None or any(g.denominator != 1 for g in gamma):
        return Ordering.INCOMPARABLE
    if all(g >= 0 for g in gamma):
        return Ordering.LESS
    if all(g <= 0 for g in gamma):
        return Ordering.GREATER
    return Ordering.INCOMPARABLE
