"""Exact sparse Laurent polynomials and symbolic seed mutation.

Cluster variables are expanded in the initial variables. F-polynomials,
g-vectors and the tropical denominator exponents are read off a
principal-coefficient mutation run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cluster import ExchangeMatrix, dominance_compare, mutate_matrix
from .errors import ClusterError, FPolynomialError, InexactDivisionError
from .words import Ordering

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """Immutable map from exponent tuples of fixed length to nonzero integers."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, nvars: int | None = None):
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            if c:
                e = tuple(int(x) for x in e)
                clean[e] = clean.get(e, 0) + int(c)
        clean = {e: c for e, c in clean.items() if c}
        lengths = {len(e) for e in clean}
        if nvars is None:
            if len(lengths) != 1:
                raise ClusterError("cannot infer the number of variables")
            nvars = lengths.pop()
        elif lengths - {nvars}:
            raise ClusterError(f"exponent length mismatch, expected {nvars}")
        self.nvars = nvars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPolynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPolynomial":
        """The variable ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(e)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in descending lexicographic order of exponents."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPolynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def _coerce(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ClusterError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                g = tuple(x + y for x, y in zip(e, f))
                out[g] = out.get(g, 0) + c * d
        return LaurentPolynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if not self.is_monomial():
                raise ClusterError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ClusterError("monomial coefficient is not a unit")
            return LaurentPolynomial({tuple(-k * x for x in e): c ** (-k)}, self.nvars)
        result = LaurentPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, d: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient ``self / d``; raises InexactDivisionError otherwise.

        Leading-term division in lexicographic order. If the quotient exists,
        its Newton polytope is the Minkowski difference of the two, so every
        quotient exponent lies in a box computed from coordinate minima and
        maxima. A candidate outside the box proves the division is inexact;
        the box also bounds the number of steps.
        """
        d = self._coerce(d)
        if not d:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return self
        if d.is_monomial():
            (f, c), = d._terms.items()
            out = {}
            for e, a in self._terms.items():
                q, r = divmod(a, c)
                if r:
                    raise InexactDivisionError(f"coefficient {a} not divisible by {c}")
                out[tuple(x - y for x, y in zip(e, f))] = q
            return LaurentPolynomial(out, self.nvars)
        n = self.nvars
        lo = [min(e[i] for e in self._terms) - min(e[i] for e in d._terms) for i in range(n)]
        hi = [max(e[i] for e in self._terms) - max(e[i] for e in d._terms) for i in range(n)]
        lead_e, lead_c = max(d._terms.items())
        rem = dict(self._terms)
        quot: dict[Exponent, int] = {}
        while rem:
            e, a = max(rem.items())
            q_e = tuple(x - y for x, y in zip(e, lead_e))
            if any(not lo[i] <= q_e[i] <= hi[i] for i in range(n)):
                raise InexactDivisionError("quotient exponent leaves the Newton box")
            q_c, r = divmod(a, lead_c)
            if r:
                raise InexactDivisionError(f"coefficient {a} not divisible by {lead_c}")
            quot[q_e] = q_c
            for f, b in d._terms.items():
                g = tuple(x + y for x, y in zip(q_e, f))
                v = rem.get(g, 0) - q_c * b
                if v:
                    rem[g] = v
                else:
                    rem.pop(g, None)
        return LaurentPolynomial(quot, n)

    def specialize(self, indices: Iterable[int], keep: Sequence[int]) -> "LaurentPolynomial":
        """Set the 1-based variables in ``indices`` to 1 and keep only ``keep``."""
        dropped = {i - 1 for i in indices}
        keep0 = [i - 1 for i in keep]
        if dropped & set(keep0):
            raise ClusterError("a variable cannot be both specialized and kept")
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            g = tuple(e[i] for i in keep0)
            out[g] = out.get(g, 0) + c
        return LaurentPolynomial(out, len(keep0))

    def substitute_monomials(self, images: Sequence[Sequence[int]]) -> "LaurentPolynomial":
        """Replace variable ``i`` by the monomial with exponent ``images[i]``."""
        if len(images) != self.nvars:
            raise ClusterError(f"need {self.nvars} images, got {len(images)}")
        target = len(images[0]) if images else 0
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            g = [0] * target
            for k, img in zip(e, images):
                if k:
                    for i, x in enumerate(img):
                        g[i] += k * x
            g = tuple(g)
            out[g] = out.get(g, 0) + c
        return LaurentPolynomial(out, target)

    def render(self, prefix: str = "x", names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = list(names) if names is not None else [f"{prefix}{i + 1}" for i in range(self.nvars)]
        chunks = []
        for e, c in self.items():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            chunks.append((c < 0, body))
        text = ("-" if chunks[0][0] else "") + chunks[0][1]
        for neg, body in chunks[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.render()!r}, nvars={self.nvars})"

    def to_json_terms(self) -> list[list]:
        return [[list(e), c] for e, c in self.items()]


@dataclass(frozen=True)
class SymbolicSeed:
    """Exchange matrix together with cluster variables written in the initial ones."""

    B: ExchangeMatrix
    vars: tuple[LaurentPolynomial, ...]

    def __post_init__(self) -> None:
        if len(self.vars) != self.B.m:
            raise ClusterError(f"need {self.B.m} variables, got {len(self.vars)}")

    @classmethod
    def initial(cls, B: ExchangeMatrix) -> "SymbolicSeed":
        m = B.m
        return cls(B, tuple(LaurentPolynomial.variable(i, m) for i in range(1, m + 1)))

    @property
    def n(self) -> int:
        return self.B.n


def exchange_binomial(B: ExchangeMatrix, k: int, vars: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    nv = vars[0].nvars
    pos = LaurentPolynomial.constant(1, nv)
    neg = LaurentPolynomial.constant(1, nv)
    for l in range(1, B.m + 1):
        b = B[l, k]
        if b > 0:
            pos = pos * vars[l - 1] ** b
        elif b < 0:
            neg = neg * vars[l - 1] ** (-b)
    return pos + neg


def mutate_symbolic(S: SymbolicSeed, k: int) -> SymbolicSeed:
    """Exchange relation in direction ``k`` with exact division."""
    B = S.B
    B._check_unfrozen(k)
    new_k = exchange_binomial(B, k, S.vars).divexact(S.vars[k - 1])
    vars = list(S.vars)
    vars[k - 1] = new_k
    return SymbolicSeed(mutate_matrix(B, k), tuple(vars))


def mutate_symbolic_sequence(S: SymbolicSeed, sequence: Iterable[int]) -> SymbolicSeed:
    for k in sequence:
        S = mutate_symbolic(S, k)
    return S


@dataclass(frozen=True)
class FData:
    F: LaurentPolynomial
    g: tuple[int, ...]
    a: tuple[int, ...]
    c: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "F": self.F.render("X"),
            "g": list(self.g),
            "a": list(self.a),
            "c": list(self.c),
        }


def max_monomial(F: LaurentPolynomial) -> tuple[int, ...]:
    """Exponent of the monomial of F divisible by every other one."""
    top = tuple(max(e[i] for e in F.terms) for i in range(F.nvars))
    if top not in F.terms:
        raise FPolynomialError(f"F = {F.render('X')} has no divisibility-maximal monomial")
    return top


def _fdata_from_principal(X: LaurentPolynomial, B: ExchangeMatrix) -> FData:
    n = B.n
    F = X.specialize(range(1, n + 1), range(n + 1, 2 * n + 1))
    if not F.is_polynomial():
        raise FPolynomialError(f"F = {F.render('X')} has negative exponents")
    if F.coefficient((0,) * n) != 1:
        raise FPolynomialError(f"F = {F.render('X')} does not have constant term 1")
    a = max_monomial(F)
    if F.coefficient(a) != 1:
        raise FPolynomialError(f"maximal monomial of F has coefficient {F.coefficient(a)}")
    degrees = set()
    for e in X.terms:
        u, v = e[:n], e[n:]
        degrees.add(tuple(u[i] - sum(B[i + 1, j + 1] * v[j] for j in range(n)) for i in range(n)))
    if len(degrees) != 1:
        raise FPolynomialError("principal-coefficient variable is not homogeneous")
    g = degrees.pop()
    c = []
    for i in range(n + 1, B.m + 1):
        c.append(min(sum(e[j] * B[i, j + 1] for j in range(n)) for e in F.terms))
    return FData(F, g, a, tuple(c))


def f_and_g(S0: SymbolicSeed | ExchangeMatrix, sequence: Sequence[int]) -> list[FData]:
    """F-polynomial, g-vector, max-monomial exponent and tropical denominator
    for every unfrozen variable after mutating along ``sequence``."""
    B = S0.B if isinstance(S0, SymbolicSeed) else S0
    prin = SymbolicSeed.initial(B.with_principal_coefficients())
    prin = mutate_symbolic_sequence(prin, sequence)
    return [_fdata_from_principal(prin.vars[l], B) for l in range(B.n)]


@dataclass
class IdentityReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def reconstruct(B: ExchangeMatrix, data: FData) -> LaurentPolynomial:
    """Rebuild the cluster variable as F(yhat) * x_frozen^(-c) * x^g."""
    n, m = B.n, B.m
    images = [B.column(j) for j in range(1, n + 1)]
    value = data.F.substitute_monomials(images)
    shift = list(data.g) + [-ci for ci in data.c]
    return value * LaurentPolynomial.monomial(shift + [0] * (m - len(shift)))


def verify_fpoly_identity(S0: SymbolicSeed | ExchangeMatrix, sequence: Sequence[int]) -> IdentityReport:
    """Check the separation formula against direct mutation for every unfrozen variable."""
    B = S0.B if isinstance(S0, SymbolicSeed) else S0
    direct = mutate_symbolic_sequence(SymbolicSeed.initial(B), sequence)
    report = IdentityReport(True)
    for l, data in enumerate(f_and_g(B, sequence), start=1):
        rebuilt = reconstruct(B, data)
        if rebuilt != direct.vars[l - 1]:
            report.ok = False
            report.failures.append(
                f"sequence {list(sequence)} variable {l}: mutated {direct.vars[l - 1]} "
                f"but F/g formula gives {rebuilt}"
            )
    return report


def pointed_term(B: ExchangeMatrix, p: LaurentPolynomial) -> tuple[Exponent, int]:
    """The unique dominance-maximal monomial of ``p`` and its coefficient.

    Raises FPolynomialError if no single monomial dominates all others.
    """
    exps = list(p.terms)
    for cand in exps:
        if all(
            e == cand or dominance_compare(B, e, cand) is Ordering.LESS
            for e in exps
        ):
            return cand, p.coefficient(cand)
    raise FPolynomialError(f"{p} has no dominance-maximal monomial")


def is_pointed(B: ExchangeMatrix, p: LaurentPolynomial) -> bool:
    try:
        return pointed_term(B, p)[1] == 1
    except FPolynomialError:
        return False


def terms_json(p: LaurentPolynomial) -> str:
    return json.dumps(p.to_json_terms())
