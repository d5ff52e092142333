import random

import pytest
from hypothesis import settings, strategies as st

from mayachain.maya import from_frobenius

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def frob_pairs(max_size=4, max_entry=8):
    s = st.sets(st.integers(0, max_entry), max_size=max_size)
    t = st.sets(st.integers(0, max_entry), max_size=max_size)
    return st.tuples(s, t).filter(lambda p: len(p[0]) + len(p[1]) <= max_size)


@st.composite
def maya_diagrams(draw, max_size=4, max_entry=8):
    s, t = draw(frob_pairs(max_size, max_entry))
    return from_frobenius(sorted(s, reverse=True), sorted(t))


def random_diagram(rng: random.Random, max_size=6, max_entry=10):
    size = rng.randint(0, max_size)
    pool = [("s", v) for v in range(max_entry + 1)] + [("t", v) for v in range(max_entry + 1)]
    picks = rng.sample(pool, size)
    s = sorted((v for side, v in picks if side == "s"), reverse=True)
    t = sorted(v for side, v in picks if side == "t")
    return from_frobenius(s, t)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
