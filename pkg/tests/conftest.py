import itertools
import random

import pytest
from hypothesis import strategies as st

from romanmyc.graph import new_graph
from romanmyc.kernel import BACKENDS


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


def seeded_graphs(count, max_n, seed=1729, p=0.5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(new_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]))
    return out


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
