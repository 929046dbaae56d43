"""Pure-Python shuffle kernels (fallback for the compiled ``_ckernels`` module).

Both kernels enumerate the riffle shuffles of ``a`` and ``b`` by choosing
which output positions receive the letters of ``a``; this visits
C(r+s, r) shuffles rather than (r+s)! permutations.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def cartan(i: int, j: int) -> int:
    """Symmetric type-A form (alpha_i, alpha_j)."""
    if i == j:
        return 2
    if i - j == 1 or j - i == 1:
        return -1
    return 0


def max_shuffle(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    r, s = len(a), len(b)
    total = r + s
    best: list[int] | None = None
    for positions in combinations(range(total), r):
        out = [0] * total
        taken = [False] * total
        for k, p in enumerate(positions):
            out[p] = a[k]
            taken[p] = True
        idx = 0
        for p in range(total):
            if not taken[p]:
                out[p] = b[idx]
                idx += 1
        if best is None or out > best:
            best = out
    return tuple(best) if best is not None else ()


def shuffle_terms(a: Sequence[int], b: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """Every shuffle as ``(word, e)`` where the term carries ``q**(-e)``."""
    r, s = len(a), len(b)
    total = r + s
    terms = []
    for positions in combinations(range(total), r):
        out = [0] * total
        taken = [False] * total
        for k, p in enumerate(positions):
            out[p] = a[k]
            taken[p] = True
        b_pos = [p for p in range(total) if not taken[p]]
        for idx, p in enumerate(b_pos):
            out[p] = b[idx]
        e = 0
        for k, pk in enumerate(positions):
            for l, pl in enumerate(b_pos):
                if pk > pl:
                    e += cartan(a[k], b[l])
        terms.append((tuple(out), e))
    return terms
