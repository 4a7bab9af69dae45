from pathlib import Path

import pytest
from hypothesis import strategies as st

from scx.complex import from_facets, full_simplex
from scx.matroid import uniform_matroid

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

TWO_FACET = from_facets(5, [[1, 2, 3], [3, 4, 5]])
CHAIN3 = from_facets(5, [[1, 2, 3], [2, 3, 5], [3, 4, 5]])

CORPUS = {
    "full2": full_simplex(2),
    "full3": full_simplex(3),
    "full4": full_simplex(4),
    "full5": full_simplex(5),
    "two-facet": TWO_FACET,
    "chain3": CHAIN3,
    "u23": uniform_matroid(2, 3),
    "u24": uniform_matroid(2, 4),
    "u35": uniform_matroid(3, 5),
}


@pytest.fixture(params=sorted(CORPUS))
def corpus_complex(request):
    return CORPUS[request.param]


@st.composite
def complexes(draw, max_n=6, max_facets=5):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(
        st.sets(st.integers(1, n), min_size=1, max_size=n), min_size=1, max_size=max_facets))
    return from_facets(n, sets)


# -- acceptance summary -----------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
