import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cspreopt import Instance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# PASS/FAIL lines from the acceptance criteria, echoed after the run
ACCEPTANCE_LINES = []

EX1_SEQS = ("AAAABBBB", "BBBBAAAA", "AAAABBBA", "BBBBAAAA")
S5 = "BBBBBBBB"


@pytest.fixture
def ex1():
    return Instance(EX1_SEQS, 4)


@pytest.fixture
def ex1p():
    return Instance(EX1_SEQS + (S5,), 4)


@st.composite
def instances(draw, max_sigma=3, max_t=4, max_n=7, max_l=3):
    alphabet = "ABC"[: draw(st.integers(1, max_sigma))]
    n = draw(st.integers(1, max_n))
    l = draw(st.integers(1, min(max_l, n)))
    t = draw(st.integers(1, max_t))
    seqs = draw(st.lists(st.text(alphabet, min_size=n, max_size=n), min_size=t, max_size=t))
    return Instance(tuple(seqs), l, alphabet)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda x: int(x.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
