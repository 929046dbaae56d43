"""Words over the alphabet {1..n}, Lyndon factorization and dominant words of type A_n.

A dominant word is encoded by a *root vector*: the multiplicity of each
positive root (a consecutive run ``k, k+1, ..., l``) in its canonical
factorization, with roots listed in decreasing lexicographic order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, Sequence

from .errors import ClusterError, NotDominantError, RankMismatchError

RootVector = tuple[int, ...]


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"

    @classmethod
    def from_sign(cls, sign: int) -> "Ordering":
        if sign < 0:
            return cls.LESS
        if sign > 0:
            return cls.GREATER
        return cls.EQUAL


@total_ordering
@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.rank < 1:
            raise ClusterError(f"rank must be >= 1, got {self.rank}")
        for x in self.letters:
            if not 1 <= x <= self.rank:
                raise ClusterError(f"letter {x} outside 1..{self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        _same_rank(self, other)
        return Word(self.letters + other.letters, self.rank)

    def __mul__(self, times: int) -> "Word":
        return Word(self.letters * times, self.rank)

    def __lt__(self, other: "Word") -> bool:
        return compare_words(self, other) is Ordering.LESS

    def __str__(self) -> str:
        return format_letters(self.letters, self.rank)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, rank={self.rank})"

    def embed(self, rank: int) -> "Word":
        """The same letters viewed in a larger rank."""
        return Word(self.letters, rank)


def _same_rank(a: Word, b: Word) -> None:
    if a.rank != b.rank:
        raise RankMismatchError(f"words of ranks {a.rank} and {b.rank} are incomparable")


def format_letters(letters: Sequence[int], rank: int) -> str:
    if rank <= 9:
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse ``"2312"`` or ``"2,3,1,2"``. Parentheses and spaces are ignored."""
    cleaned = text.strip().replace("(", "").replace(")", "").replace(" ", "")
    if not cleaned:
        letters: tuple[int, ...] = ()
    elif "," in cleaned:
        letters = tuple(int(x) for x in cleaned.split(",") if x)
    else:
        if not cleaned.isdigit():
            raise ClusterError(f"cannot parse word {text!r}")
        letters = tuple(int(c) for c in cleaned)
    if rank is None:
        rank = max(letters, default=1)
    return Word(letters, rank)


def compare_words(a: Word, b: Word) -> Ordering:
    """Lexicographic order; a proper prefix is smaller than its extensions."""
    _same_rank(a, b)
    if a.letters == b.letters:
        return Ordering.EQUAL
    # tuple comparison already ranks a proper prefix first
    return Ordering.LESS if a.letters < b.letters else Ordering.GREATER


def is_lyndon(w: Word) -> bool:
    if not w.letters:
        raise ClusterError("Lyndon property is undefined for the empty word")
    s = w.letters
    return all(s < s[i:] for i in range(1, len(s)))


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[Word, int], ...]
    rank: int

    def expand(self) -> Word:
        out = Word((), self.rank)
        for word, mult in self.factors:
            out = out + word * mult
        return out

    def words(self) -> list[Word]:
        """Factors with multiplicity, in order."""
        return [w for w, mult in self.factors for _ in range(mult)]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = []
        for word, mult in self.factors:
            parts.append(f"({word})" + (f"^{mult}" if mult > 1 else ""))
        return "".join(parts)


def duval(letters: Sequence[int]) -> list[tuple[int, ...]]:
    """Duval's algorithm: Lyndon factors of ``letters`` in non-increasing order."""
    s = tuple(letters)
    n = len(s)
    out: list[tuple[int, ...]] = []
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and s[i] <= s[j]:
            i = k if s[i] < s[j] else i + 1
            j += 1
        period = j - i
        while k <= i:
            out.append(s[k : k + period])
            k += period
    return out


def canonical_factorization(w: Word) -> Factorization:
    grouped: list[tuple[Word, int]] = []
    for piece in duval(w.letters):
        if grouped and grouped[-1][0].letters == piece:
            grouped[-1] = (grouped[-1][0], grouped[-1][1] + 1)
        else:
            grouped.append((Word(piece, w.rank), 1))
    return Factorization(tuple(grouped), w.rank)


def is_run(letters: Sequence[int]) -> bool:
    """True for a nonempty consecutive increasing run k, k+1, ..., l."""
    return len(letters) > 0 and all(b == a + 1 for a, b in zip(letters, letters[1:]))


def is_dominant(w: Word) -> bool:
    return all(is_run(f.letters) for f, _ in canonical_factorization(w))


def num_roots(n: int) -> int:
    return n * (n + 1) // 2


def rank_from_length(length: int) -> int:
    n = (math.isqrt(8 * length + 1) - 1) // 2
    if num_roots(n) != length or n < 1:
        raise ClusterError(f"{length} is not a triangular number n(n+1)/2 with n >= 1")
    return n


@lru_cache(maxsize=None)
def _root_letters(n: int) -> tuple[tuple[int, ...], ...]:
    runs = [tuple(range(i, j + 1)) for i in range(1, n + 1) for j in range(i, n + 1)]
    return tuple(sorted(runs, reverse=True))


@lru_cache(maxsize=None)
def _root_index(n: int) -> dict[tuple[int, ...], int]:
    return {letters: idx for idx, letters in enumerate(_root_letters(n))}


def root_order(n: int) -> list[Word]:
    """Positive roots of A_n as run words, strictly decreasing."""
    if n < 1:
        raise ClusterError("rank must be >= 1")
    return [Word(r, n) for r in _root_letters(n)]


def word_to_vector(w: Word) -> RootVector:
    index = _root_index(w.rank)
    coords = [0] * num_roots(w.rank)
    for factor, mult in canonical_factorization(w):
        pos = index.get(factor.letters)
        if pos is None:
            raise NotDominantError(f"{w} is not dominant: factor ({factor}) is not a root")
        coords[pos] += mult
    return tuple(coords)


def vector_to_word(v: Sequence[int], rank: int | None = None) -> Word:
    n = rank_from_length(len(v)) if rank is None else rank
    if len(v) != num_roots(n):
        raise ClusterError(f"vector of length {len(v)} does not match rank {n}")
    if any(c < 0 for c in v):
        raise NotDominantError(f"{tuple(v)} has a negative coordinate; it is not a word")
    letters: list[int] = []
    for root, mult in zip(_root_letters(n), v):
        letters.extend(root * mult)
    return Word(tuple(letters), n)


def compare_vectors(u: Sequence[int], v: Sequence[int]) -> Ordering:
    """Order by the sign of the first nonzero coordinate of ``u - v``."""
    if len(u) != len(v):
        raise ClusterError(f"length mismatch: {len(u)} vs {len(v)}")
    for a, b in zip(u, v):
        if a != b:
            return Ordering.GREATER if a > b else Ordering.LESS
    return Ordering.EQUAL


def vector_sign(v: Sequence[int]) -> int:
    for c in v:
        if c:
            return 1 if c > 0 else -1
    return 0


def letter_content(w: Word) -> tuple[int, ...]:
    counts = [0] * w.rank
    for x in w.letters:
        counts[x - 1] += 1
    return tuple(counts)


def vector_content(v: Sequence[int], rank: int | None = None) -> tuple[int, ...]:
    """Letter content of a (possibly generalized) root vector, extended linearly."""
    n = rank_from_length(len(v)) if rank is None else rank
    counts = [0] * n
    for root, mult in zip(_root_letters(n), v):
        for x in root:
            counts[x - 1] += mult
    return tuple(counts)


def dominant_words(n: int, max_length: int) -> Iterable[Word]:
    """All dominant words of rank ``n`` with length <= ``max_length``."""
    lengths = [len(r) for r in _root_letters(n)]

    def rec(i: int, budget: int, acc: list[int]):
        if i == len(lengths):
            yield tuple(acc)
            return
        for mult in range(budget // lengths[i] + 1):
            acc.append(mult)
            yield from rec(i + 1, budget - mult * lengths[i], acc)
            acc.pop()

    for vec in rec(0, max_length, []):
        yield vector_to_word(vec, n)
