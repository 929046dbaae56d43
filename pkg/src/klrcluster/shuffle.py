"""Quantum shuffle product and brute-force oracles for the dominant-word monoid.

Characters are formal sums of words with coefficients in Z[q, q^-1].
``odot_oracle`` computes the monoid law by enumerating every shuffle; it
is the reference that the vector-addition law in ``mutation`` is tested
against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from . import kernels
from ._pykernels import cartan
from .errors import ClusterError, NotDominantError
from .words import Word, canonical_factorization, is_dominant


cartan_pairing = cartan


@dataclass(frozen=True)
class QPolynomial:
    """Laurent polynomial in q with integer coefficients."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(self.coeffs.items()) if v})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPolynomial":
        return cls({exp: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        out: dict[int, int] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return QPolynomial(out)

    def shift(self, k: int) -> "QPolynomial":
        return QPolynomial({e + k: c for e, c in self.coeffs.items()})

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            mono = "" if exp == 0 else ("q" if exp == 1 else f"q^{exp}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ONE = QPolynomial({0: 1})


class WordSeries:
    """Finite formal sum of words of one rank with QPolynomial coefficients."""

    def __init__(self, terms: Mapping[Word, QPolynomial] | None = None, rank: int | None = None):
        self.terms: dict[Word, QPolynomial] = {w: p for w, p in (terms or {}).items() if p}
        ranks = {w.rank for w in self.terms}
        if rank is not None:
            ranks.add(rank)
        if len(ranks) > 1:
            raise ClusterError(f"mixed ranks in series: {sorted(ranks)}")
        self.rank = ranks.pop() if ranks else None

    @classmethod
    def of_word(cls, w: Word) -> "WordSeries":
        return cls({w: ONE})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordSeries):
            return self.terms == other.terms
        return NotImplemented

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, w: Word) -> bool:
        return w in self.terms

    def __getitem__(self, w: Word) -> QPolynomial:
        return self.terms.get(w, QPolynomial())

    def __add__(self, other: "WordSeries") -> "WordSeries":
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, QPolynomial()) + p
        return WordSeries(out)

    def shift(self, k: int) -> "WordSeries":
        return WordSeries({w: p.shift(k) for w, p in self.terms.items()}, self.rank)

    def words(self) -> list[Word]:
        return sorted(self.terms, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for w in self.words():
            p = self.terms[w]
            if p == ONE:
                chunks.append(f"({w})")
            elif len(p.coeffs) == 1:
                chunks.append(f"{p} ({w})")
            else:
                chunks.append(f"({p}) ({w})")
        return " + ".join(chunks)

    def to_json(self) -> str:
        payload = {str(w): [[e, c] for e, c in self.terms[w].coeffs.items()] for w in self.words()}
        return json.dumps(payload)


def shuffle(a: Word, b: Word) -> WordSeries:
    """Quantum shuffle product; each shuffle contributes ``q**(-e)``."""
    if a.rank != b.rank:
        raise ClusterError("shuffle requires words of the same rank")
    out: dict[Word, QPolynomial] = {}
    for letters, e in kernels.shuffle_terms(a.letters, b.letters):
        w = Word(letters, a.rank)
        out[w] = out.get(w, QPolynomial()) + QPolynomial.monomial(-e)
    return WordSeries(out, a.rank)


def shuffle_series(s: WordSeries, t: WordSeries) -> WordSeries:
    """Bilinear extension of :func:`shuffle`."""
    total = WordSeries(rank=s.rank or t.rank)
    for u, p in s.terms.items():
        for v, r in t.terms.items():
            prod = shuffle(u, v)
            coeff = p * r
            total = total + WordSeries({w: coeff * c for w, c in prod.terms.items()})
    return total


def max_word(s: WordSeries) -> Word:
    if not s.terms:
        raise ClusterError("max_word of an empty series")
    return max(s.terms)


def _require_dominant(*words: Word) -> None:
    for w in words:
        if not is_dominant(w):
            raise NotDominantError(f"{w} is not a dominant word")


def odot_oracle(a: Word, b: Word) -> Word:
    """Greatest word in the shuffle of two dominant words, by enumeration.

    Shuffle coefficients are sums of powers of q with positive signs, so no
    word cancels and the greatest shuffle is the greatest word of the series.
    """
    _require_dominant(a, b)
    if a.rank != b.rank:
        raise ClusterError("odot_oracle requires words of the same rank")
    return Word(kernels.max_shuffle(a.letters, b.letters), a.rank)


def shift_exponent(mu: Word) -> int:
    """Grading shift of the induced module: sum over factors of n_k(n_k - 1)/2."""
    # (root, root) = 2 for every positive root in type A
    return sum(mult * (mult - 1) // 2 for _, mult in canonical_factorization(mu))


def delta_character(mu: Word) -> WordSeries:
    """Character of the induced module built from the canonical factors of ``mu``."""
    _require_dominant(mu)
    series = WordSeries.of_word(Word((), mu.rank))
    for factor in canonical_factorization(mu).words():
        series = shuffle_series(series, WordSeries.of_word(factor))
    return series.shift(shift_exponent(mu))

