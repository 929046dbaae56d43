"""Seeds decorated by dominant-word parameters and their mutation.

Parameters are stored as root vectors, so the monoid law is vector
addition and the order on parameters is the sign of the first nonzero
coordinate.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import klr_seed
from .cluster import ExchangeMatrix, mutate_matrix
from .errors import ClusterError, NonDominantParameterError
from .laurent import f_and_g
from .words import Ordering, Word, compare_vectors, parse_word, vector_sign, vector_to_word, word_to_vector

RootVector = tuple[int, ...]


class Compatibility(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    NOT_COMPATIBLE = "not_compatible"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ParamSeed:
    B: ExchangeMatrix
    params: tuple[RootVector, ...]
    rank: int

    def __post_init__(self) -> None:
        params = tuple(tuple(int(x) for x in p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != self.B.m:
            raise ClusterError(f"need {self.B.m} parameters, got {len(params)}")
        width = klr_seed.r(self.rank)
        for p in params:
            if len(p) != width:
                raise ClusterError(f"parameter {p} does not have length {width}")

    @property
    def n(self) -> int:
        return self.B.n

    def key(self) -> tuple:
        return (self.B.rows, self.params)

    def words(self) -> list[Word]:
        return [vector_to_word(p, self.rank) for p in self.params]

    def word(self, i: int) -> Word:
        return vector_to_word(self.params[i - 1], self.rank)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "words": [str(w) for w in self.words()],
            "params": [list(p) for p in self.params],
            "matrix": self.B.to_dict(),
            "frozen_from": self.B.n + 1,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ParamSeed":
        B = ExchangeMatrix.from_dict(data["matrix"])
        rank = int(data["rank"])
        if "params" in data:
            params = [tuple(p) for p in data["params"]]
        else:
            params = [word_to_vector(parse_word(w, rank)) for w in data["words"]]
        return cls(B, tuple(params), rank)

    @classmethod
    def from_json(cls, text: str) -> "ParamSeed":
        return cls.from_dict(json.loads(text))


def initial_seed(n: int) -> ParamSeed:
    """The seed S_0^n with its initial dominant words."""
    B = klr_seed.seed_matrix(n)
    params = tuple(word_to_vector(w) for w in klr_seed.initial_parameters(n))
    return ParamSeed(B, params, n)


def odot(a: Sequence[int], b: Sequence[int]) -> RootVector:
    if len(a) != len(b):
        raise ClusterError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def scale(k: int, v: Sequence[int]) -> RootVector:
    return tuple(k * x for x in v)


def vsum(vectors: Sequence[Sequence[int]], width: int) -> RootVector:
    out = [0] * width
    for v in vectors:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


def vmax(u: RootVector, v: RootVector) -> RootVector:
    return v if compare_vectors(u, v) is Ordering.LESS else u


def exchange_sides(S: ParamSeed, k: int) -> tuple[RootVector, RootVector]:
    """The two products of neighbouring parameters in the exchange relation at ``k``."""
    width = klr_seed.r(S.rank)
    pos = vsum([scale(S.B[i, k], S.params[i - 1]) for i in range(1, S.B.m + 1) if S.B[i, k] > 0], width)
    neg = vsum([scale(-S.B[i, k], S.params[i - 1]) for i in range(1, S.B.m + 1) if S.B[i, k] < 0], width)
    return pos, neg


def mutate_parameters(S: ParamSeed, k: int) -> ParamSeed:
    S.B._check_unfrozen(k)
    pos, neg = exchange_sides(S, k)
    new = tuple(a - b for a, b in zip(vmax(pos, neg), S.params[k - 1]))
    if any(x < 0 for x in new):
        raise NonDominantParameterError(
            f"mutation at {k} gives {new}, which is a non-dominant parameter"
        )
    params = list(S.params)
    params[k - 1] = new
    return ParamSeed(mutate_matrix(S.B, k), tuple(params), S.rank)


def mutate_sequence(S: ParamSeed, sequence: Sequence[int]) -> ParamSeed:
    for k in sequence:
        S = mutate_parameters(S, k)
    return S


def hat_mu(S: ParamSeed, j: int) -> RootVector:
    """Generalized parameter sum_i b_ij vec(mu_i)."""
    S.B._check_unfrozen(j)
    width = klr_seed.r(S.rank)
    return vsum([scale(S.B[i, j], S.params[i - 1]) for i in range(1, S.B.m + 1)], width)


def hat_mus(S: ParamSeed) -> list[RootVector]:
    return [hat_mu(S, j) for j in range(1, S.n + 1)]


def check_compatible(S: ParamSeed) -> Compatibility:
    signs = [vector_sign(h) for h in hat_mus(S)]
    if all(s >= 0 for s in signs):
        return Compatibility.INCREASING
    if all(s <= 0 for s in signs):
        return Compatibility.DECREASING
    return Compatibility.NOT_COMPATIBLE


@dataclass(frozen=True)
class ExploredSeed:
    sequence: tuple[int, ...]
    seed: ParamSeed
    verdict: Compatibility

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "verdict": self.verdict.value,
            "words": [str(w) for w in self.seed.words()],
        }


class ExplorationLimit(ClusterError):
    pass


def iter_explore(S0: ParamSeed, depth: int | None, max_seeds: int = 100_000) -> Iterator[ExploredSeed]:
    """Breadth-first walk over reduced mutation sequences.

    A seed equal to one seen before (same matrix and parameters) is not
    expanded again. Directions are tried in increasing order so the walk
    is deterministic. ``depth=None`` runs to closure, bounded by ``max_seeds``.
    """
    if depth is not None and depth < 0:
        raise ClusterError("depth must be nonnegative")
    seen = {S0.key()}
    queue = deque([((), S0)])
    while queue:
        seq, S = queue.popleft()
        yield ExploredSeed(seq, S, check_compatible(S))
        if depth is not None and len(seq) >= depth:
            continue
        for k in range(1, S.n + 1):
            if seq and seq[-1] == k:
                continue
            T = mutate_parameters(S, k)
            if T.key() in seen:
                continue
            seen.add(T.key())
            if len(seen) > max_seeds:
                raise ExplorationLimit(f"more than {max_seeds} seeds; pass a depth bound")
            queue.append((seq + (k,), T))


def explore(S0: ParamSeed, depth: int | None, max_seeds: int = 100_000) -> list[ExploredSeed]:
    return list(iter_explore(S0, depth, max_seeds))


@dataclass
class CrosscheckReport:
    ok: bool
    expected: RootVector
    computed: RootVector
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def corollary_crosscheck(S0: ParamSeed, sequence: Sequence[int], l: int) -> CrosscheckReport:
    """Compare the mutated parameter at ``l`` with the one predicted by a, c and g."""
    verdict = check_compatible(S0)
    if verdict is Compatibility.NOT_COMPATIBLE:
        raise ClusterError("cross-check needs a compatible initial seed")
    S0.B._check_unfrozen(l)
    data = f_and_g(S0.B, sequence)[l - 1]
    width = klr_seed.r(S0.rank)
    n = S0.n
    parts = [scale(g, S0.params[i]) for i, g in enumerate(data.g)]
    parts += [scale(-c, S0.params[n + i]) for i, c in enumerate(data.c)]
    if verdict is Compatibility.INCREASING:
        parts += [scale(a, hat_mu(S0, j)) for j, a in enumerate(data.a, start=1)]
    computed = vsum(parts, width)
    expected = mutate_sequence(S0, sequence).params[l - 1]
    return CrosscheckReport(
        computed == expected,
        expected,
        computed,
        {"sequence": list(sequence), "l": l, **data.to_dict(), "verdict": verdict.value},
    )
