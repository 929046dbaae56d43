"""Fraction-free Gaussian elimination (Bareiss) over the integers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form with integer entries, plus the pivot columns.

    Every division performed is exact by Sylvester's identity.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return a, []
    m, ncols = len(a), len(a[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                num = piv * a[i][j] - a[i][c] * a[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                a[i][j] = q
            a[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(bareiss_echelon(rows)[1])


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Solve ``A x = b`` for a full-column-rank ``A``; None if inconsistent.

    Raises ValueError when ``A`` does not have full column rank.
    """
    ncols = len(rows[0]) if rows else 0
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    if rank(rows) < ncols:
        raise ValueError("matrix does not have full column rank")
    echelon, pivots = bareiss_echelon(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r in reversed(range(ncols)):
        row = echelon[r]
        acc = Fraction(row[ncols]) - sum(row[j] * x[j] for j in range(r + 1, ncols))
        x[r] = acc / row[r]
    return tuple(x)
