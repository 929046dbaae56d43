import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from klrcluster import _pykernels, kernels
from klrcluster.errors import ClusterError, NotDominantError
from klrcluster.shuffle import (
    QPolynomial,
    WordSeries,
    cartan_pairing,
    delta_character,
    max_word,
    odot_oracle,
    shift_exponent,
    shuffle,
)
from klrcluster.words import Word, canonical_factorization, dominant_words, letter_content, parse_word

import oracles


def w(text, rank=3):
    return parse_word(text, rank)


def series(mapping, rank=3):
    return WordSeries({w(k, rank): QPolynomial(v) for k, v in mapping.items()}, rank)


def test_cartan_form():
    for i in range(1, 6):
        assert cartan_pairing(i, i) == 2
        for j in range(1, 6):
            assert cartan_pairing(i, j) == cartan_pairing(j, i)
    assert cartan_pairing(2, 3) == -1
    assert cartan_pairing(1, 3) == 0


def test_shuffle_examples():
    assert shuffle(w("3"), w("12")) == series({"312": {0: 1}, "132": {0: 1}, "123": {1: 1}})
    assert shuffle(w("1"), w("1")) == series({"11": {0: 1, -2: 1}})
    assert shuffle(Word((), 3), w("21")) == series({"21": {0: 1}})
    assert max_word(shuffle(w("3"), w("12"))) == w("312")
    assert max_word(shuffle(w("12"), w("21"))) == w("2121")
    assert max_word(series({"1": {0: 1}})) == w("1")
    with pytest.raises(ClusterError):
        max_word(WordSeries(rank=3))


def test_shuffle_rank_mismatch():
    with pytest.raises(ClusterError):
        shuffle(w("1", 2), w("1", 3))


@given(st.lists(st.integers(1, 3), max_size=4), st.lists(st.integers(1, 3), max_size=3))
def test_shuffle_matches_permutation_oracle(a, b):
    got = shuffle(Word(tuple(a), 3), Word(tuple(b), 3))
    expected = oracles.shuffle_by_permutations(tuple(a), tuple(b))
    assert {x.letters: dict(p.coeffs) for x, p in got.terms.items()} == expected


@given(st.lists(st.integers(1, 4), max_size=5), st.lists(st.integers(1, 4), max_size=5))
def test_shuffle_preserves_content(a, b):
    wa, wb = Word(tuple(a), 4), Word(tuple(b), 4)
    target = tuple(x + y for x, y in zip(letter_content(wa), letter_content(wb)))
    s = shuffle(wa, wb)
    assert all(letter_content(x) == target for x in s.terms)
    assert sum(p.at_one() for p in s.terms.values()) == len(list(itertools.combinations(range(len(a) + len(b)), len(a))))


@given(st.lists(st.integers(1, 4), max_size=6), st.lists(st.integers(1, 4), max_size=6))
def test_compiled_and_python_kernels_agree(a, b):
    a, b = tuple(a), tuple(b)
    assert tuple(kernels.max_shuffle(a, b)) == tuple(_pykernels.max_shuffle(a, b))
    assert sorted(kernels.shuffle_terms(a, b)) == sorted(_pykernels.shuffle_terms(a, b))


def test_odot_oracle_requires_dominant():
    with pytest.raises(NotDominantError):
        odot_oracle(w("3213"), w("1"))


def test_odot_oracle_concatenation_when_ordered():
    words = list(dominant_words(3, 4))
    for a in words:
        for b in words:
            fa, fb = canonical_factorization(a).words(), canonical_factorization(b).words()
            if fa and fb and fa[-1] >= fb[0]:
                assert odot_oracle(a, b) == a + b


def test_odot_oracle_commutative_associative():
    words = list(dominant_words(3, 4))
    for a in words:
        for b in words:
            assert odot_oracle(a, b) == odot_oracle(b, a)
    small = list(dominant_words(3, 2))
    for a, b, c in itertools.product(small, repeat=3):
        assert odot_oracle(odot_oracle(a, b), c) == odot_oracle(a, odot_oracle(b, c))


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_max_shuffle_monotone(r, s, data):
    letters = st.lists(st.integers(1, 3), min_size=r, max_size=r)
    a, a2 = sorted([tuple(data.draw(letters)), tuple(data.draw(letters))], reverse=True)
    letters = st.lists(st.integers(1, 3), min_size=s, max_size=s)
    b, b2 = sorted([tuple(data.draw(letters)), tuple(data.draw(letters))], reverse=True)
    big = max_word(shuffle(Word(a, 3), Word(b, 3)))
    small = max_word(shuffle(Word(a2, 3), Word(b2, 3)))
    assert big >= small


def test_delta_character():
    assert str(delta_character(parse_word("11", 1))) == "(q + q^-1) (11)"
    assert shift_exponent(parse_word("11", 1)) == 1
    assert shift_exponent(w("2312")) == 0
    assert str(delta_character(w("123"))) == "(123)"
    head = delta_character(w("2312"))
    assert w("2312") in head and max_word(head) == w("2312")
    with pytest.raises(NotDominantError):
        delta_character(w("3213"))


def test_qpolynomial_rendering():
    assert str(QPolynomial({1: 1, -1: 1})) == "q + q^-1"
    assert str(QPolynomial({0: -2, 3: 1})) == "q^3 - 2"
    assert str(QPolynomial()) == "0"
    assert QPolynomial({0: 0}) == QPolynomial()


def test_series_json():
    s = delta_character(parse_word("11", 1))
    assert s.to_json() == '{"11": [[-1, 1], [1, 1]]}'


def test_backend_selection_respects_env():
    import os
    import subprocess
    import sys

    code = "from klrcluster import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, KLRCLUSTER_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
