"""Independent reference implementations used only by the tests.

Each one takes a deliberately different route from the library code:
brute force over definitions, permutations instead of combinations,
and sympy rational functions instead of the sparse Laurent engine.
"""

from __future__ import annotations

import itertools

import sympy


def lex_less(a: tuple, b: tuple) -> bool:
    # Python tuple comparison already treats a proper prefix as smaller
    return a < b


def lyndon_by_rotation(w: tuple) -> bool:
    """Lyndon iff strictly smaller than every nontrivial rotation (and aperiodic)."""
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def factorize_greedy(w: tuple) -> list[tuple]:
    """Repeatedly strip the longest Lyndon prefix."""
    out = []
    while w:
        k = max(i for i in range(1, len(w) + 1) if lyndon_by_rotation(w[:i]))
        out.append(w[:k])
        w = w[k:]
    return out


def shuffle_by_permutations(a: tuple, b: tuple) -> dict[tuple, dict[int, int]]:
    """Quantum shuffle: iterate over all permutations and keep the shuffles."""
    r, s = len(a), len(b)
    letters = a + b
    out: dict[tuple, dict[int, int]] = {}
    for sigma in set(itertools.permutations(range(r + s))):
        if any(sigma[k] > sigma[k + 1] for k in range(r - 1)):
            continue
        if any(sigma[k] > sigma[k + 1] for k in range(r, r + s - 1)):
            continue
        word = [0] * (r + s)
        for src, dst in enumerate(sigma):
            word[dst] = letters[src]
        e = 0
        for k in range(r):
            for l in range(r, r + s):
                if sigma[k] > sigma[l]:
                    x, y = letters[k], letters[l]
                    e += 2 if x == y else (-1 if abs(x - y) == 1 else 0)
        poly = out.setdefault(tuple(word), {})
        poly[-e] = poly.get(-e, 0) + 1
    return out


def sympy_mutate(B: list[list[int]], n: int, xs: list, k: int) -> tuple[list[list[int]], list]:
    """Mutation on rational functions, with sympy doing the algebra."""
    m = len(B)
    pos, neg = sympy.Integer(1), sympy.Integer(1)
    for l in range(m):
        b = B[l][k - 1]
        if b > 0:
            pos *= xs[l] ** b
        elif b < 0:
            neg *= xs[l] ** (-b)
    new = list(xs)
    new[k - 1] = sympy.cancel((pos + neg) / xs[k - 1])
    kk = k - 1
    B2 = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if i == kk or j == kk:
                B2[i][j] = -B[i][j]
            else:
                B2[i][j] = B[i][j] + (abs(B[i][kk]) * B[kk][j] + B[i][kk] * abs(B[kk][j])) // 2
    return B2, new


def sympy_laurent_terms(expr, symbols) -> dict[tuple, int]:
    """Exponent -> coefficient map of a Laurent polynomial given as a sympy expression."""
    num, den = sympy.fraction(sympy.together(sympy.expand(expr)))
    den_poly = sympy.Poly(den, *symbols)
    if len(den_poly.terms()) != 1:
        raise ValueError(f"{expr} is not a Laurent polynomial")
    (dexp, dcoef), = den_poly.terms()
    out = {}
    for exp, coef in sympy.Poly(num, *symbols).terms():
        q = sympy.Rational(coef, dcoef)
        assert q.q == 1, "non-integer coefficient"
        out[tuple(a - b for a, b in zip(exp, dexp))] = int(q)
    return out


def sympy_gamma(B: list[list[int]], delta: list[int]):
    """Rational solution of B gamma = delta via sympy, or None."""
    M = sympy.Matrix(B)
    rhs = sympy.Matrix(delta)
    try:
        sol, params = M.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    assert not params, "full column rank expected"
    return [sympy.Rational(x) for x in sol]


def kkko_arrows(letters: tuple, adjacency: bool = True) -> set[tuple[int, int]]:
    """Arrow set straight from the quadruple inequality, with all frozen-frozen arrows kept."""
    size = len(letters)

    def plus(s):
        return next((t for t in range(s + 1, size + 1) if letters[t - 1] == letters[s - 1]), size + 1)

    def minus(s):
        return next((t for t in range(s - 1, 0, -1) if letters[t - 1] == letters[s - 1]), 0)

    arrows = set()
    for s in range(1, size + 1):
        for t in range(1, size + 1):
            if s < t < plus(s) < plus(t) <= size + 1:
                if not adjacency or abs(letters[s - 1] - letters[t - 1]) == 1:
                    arrows.add((s, t))
        if minus(s) >= 1:
            arrows.add((s, minus(s)))
    return arrows
