"""The initial monoidal seed of type A_n built from the longest Weyl group element."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cluster import ExchangeMatrix, Quiver, quiver_to_matrix
from .errors import ClusterError
from .shuffle import cartan_pairing
from .words import Word, canonical_factorization, letter_content


def r(n: int) -> int:
    """Number of positive roots of A_n."""
    return n * (n + 1) // 2


def reduced_word(n: int) -> tuple[int, ...]:
    """Letters of the reduced word for w_0, indexed in blocks k, k-1, ..., 1."""
    if n < 1:
        raise ClusterError(f"rank must be positive, got {n}")
    out: list[int] = []
    for k in range(1, n + 1):
        out.extend(range(k, 0, -1))
    return tuple(out)


@dataclass(frozen=True)
class PlusMinus:
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def frozen(self) -> list[int]:
        top = len(self.plus) + 1
        return [s for s, p in enumerate(self.plus, start=1) if p == top]


def plus_minus(letters: tuple[int, ...]) -> PlusMinus:
    """1-based next and previous occurrence of each letter (r+1 and 0 when absent)."""
    size = len(letters)
    plus, minus = [size + 1] * size, [0] * size
    last: dict[int, int] = {}
    for s, letter in enumerate(letters, start=1):
        if letter in last:
            minus[s - 1] = last[letter]
            plus[last[letter] - 1] = s
        last[letter] = s
    return PlusMinus(tuple(plus), tuple(minus))


def build_quiver(n: int) -> Quiver:
    """Seed quiver on 1..r_n with frozen vertices r_{n-1}+1..r_n."""
    letters = reduced_word(n)
    pm = plus_minus(letters)
    size = len(letters)
    arrows = []
    for s in range(1, size + 1):
        sp = pm.plus[s - 1]
        for t in range(s + 1, sp):
            tp = pm.plus[t - 1]
            if sp < tp <= size + 1 and abs(letters[s - 1] - letters[t - 1]) == 1:
                arrows.append((s, t))
        if pm.minus[s - 1] >= 1:
            arrows.append((s, pm.minus[s - 1]))
    n_unfrozen = r(n - 1)
    # arrows joining two frozen vertices carry no exchange data
    arrows = [(s, t) for s, t in arrows if s <= n_unfrozen or t <= n_unfrozen]
    return Quiver(size, n_unfrozen, tuple(arrows))


def _a_block(k: int) -> list[list[int]]:
    return [[1 if j == i + 1 else -1 if j == i - 1 else 0 for j in range(k)] for i in range(k)]


def _b_block(k: int) -> list[list[int]]:
    rows = [[-1 if j == i else 1 if j == i - 1 else 0 for j in range(k)] for i in range(k)]
    rows.append([0] * (k - 1) + [1])
    return rows


def block_matrix(n: int) -> ExchangeMatrix:
    """Exchange matrix assembled from the A, B and C blocks."""
    if n < 2:
        raise ClusterError("block matrix needs rank at least 2")
    rows = [[0] * r(n - 1) for _ in range(r(n))]

    def place(block: list[list[int]], row_block: int, col_block: int) -> None:
        r0, c0 = r(row_block - 1), r(col_block - 1)
        for i, line in enumerate(block):
            for j, v in enumerate(line):
                rows[r0 + i][c0 + j] = v

    for j in range(1, n):
        place(_a_block(j), j, j)
        place(_b_block(j), j + 1, j)
        if j >= 2:
            c = [list(col) for col in zip(*_b_block(j - 1))]
            place([[-v for v in line] for line in c], j - 1, j)
    return ExchangeMatrix.from_rows(rows, r(n - 1))


def seed_matrix(n: int) -> ExchangeMatrix:
    return quiver_to_matrix(build_quiver(n)) if n == 1 else block_matrix(n)


def initial_parameter(n: int, k: int, j: int) -> Word:
    """Word at row k, column j: (j..k)(j-1..k-1)...(1..k-j+1)."""
    if not 1 <= j <= k <= n:
        raise ClusterError(f"no initial parameter at row {k}, column {j}")
    letters: list[int] = []
    for shift in range(j):
        letters.extend(range(j - shift, k - shift + 1))
    return Word(tuple(letters), n)


def initial_parameters(n: int) -> list[Word]:
    return [initial_parameter(n, k, j) for k in range(1, n + 1) for j in range(1, k + 1)]


def frozen_weight(n: int, k: int) -> tuple[int, ...]:
    """Simple-root coefficients of the frozen word at column k, from the closed form."""
    return tuple(min(i, n + 1 - i, k, n + 1 - k) for i in range(1, n + 1))


def root_pairings(w: Word) -> tuple[int, ...]:
    """``(wt(w), alpha_i)`` for i = 1..n via the Cartan form over the letters of ``w``."""
    return tuple(sum(cartan_pairing(a, i) for a in w.letters) for i in range(1, w.rank + 1))


def expected_pairing(n: int, k: int, i: int) -> int:
    return (i == k) + (i == n + 1 - k)


def weight_pairing_check(n: int) -> bool:
    """Pairings of every frozen word with the simple roots."""
    for k in range(1, n + 1):
        w = initial_parameter(n, n, k)
        if root_pairings(w) != tuple(expected_pairing(n, k, i) for i in range(1, n + 1)):
            return False
    return True


def frozen_content_check(n: int) -> bool:
    return all(
        letter_content(initial_parameter(n, n, k)) == frozen_weight(n, k) for k in range(1, n + 1)
    )


def frozen_factor_counts(n: int) -> list[int]:
    return [len(canonical_factorization(initial_parameter(n, n, j))) for j in range(1, n + 1)]


def seed_dict(n: int) -> dict:
    return {
        "rank": n,
        "words": [str(w) for w in initial_parameters(n)],
        "matrix": seed_matrix(n).to_dict(),
        "frozen_from": r(n - 1) + 1,
    }


def seed_json(n: int) -> str:
    return json.dumps(seed_dict(n))
