import itertools

import pytest
from hypothesis import strategies as st

from posetfix import FinitePoset


def diamond() -> FinitePoset:
    return FinitePoset.from_cover_relation(
        ["m", "a", "b", "M"], [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M")]
    )


@pytest.fixture
def dia():
    return diamond()


@st.composite
def posets(draw, max_n=7):
    """Random posets as closures of forward DAGs under a random labelling."""
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [pair for pair in pairs if draw(st.booleans())]
    order = draw(st.permutations(range(n)))
    labels = [f"v{k}" for k in order]
    return FinitePoset.from_cover_relation(labels, [(labels[i], labels[j]) for i, j in edges])


def brute_chains(p):
    """Every nonempty subset that is pairwise comparable."""
    out = []
    for r in range(1, len(p) + 1):
        for S in itertools.combinations(range(len(p)), r):
            if all(p.comparable(x, y) for x, y in itertools.combinations(S, 2)):
                out.append(frozenset(S))
    return out


def brute_sup(p, S):
    ubs = [u for u in p if all(p.leq(s, u) for s in S)]
    least = [u for u in ubs if all(p.leq(u, v) for v in ubs)]
    return least[0] if least else None


# Acceptance verdicts, one line per criterion, echoed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
