import itertools
import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def reduced_sequences(n, max_len):
    out = [()]
    for length in range(1, max_len + 1):
        out += [
            s for s in itertools.product(range(1, n + 1), repeat=length)
            if all(a != b for a, b in zip(s, s[1:]))
        ]
    return out


@pytest.fixture
def b0():
    from klrcluster.cluster import ExchangeMatrix

    return ExchangeMatrix.from_rows(B0_ROWS, 3)


B0_ROWS = [[0, 1, -1], [-1, 0, 1], [1, -1, 0], [0, -1, 0], [0, 1, -1], [0, 0, 1]]
B1_ROWS = [[0, -1, 1], [1, 0, 0], [-1, 0, 0], [0, -1, 0], [0, 1, -1], [0, 0, 1]]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
