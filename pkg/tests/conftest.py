import pytest
from hypothesis import strategies as st

from lexmono.core import CofiniteMonotoneMap
from lexmono.product import Element


def points(lo=-10, hi=10, size=6):
    return st.lists(st.integers(lo, hi), max_size=size, unique=True).map(lambda p: tuple(sorted(p)))


def maps(lo=-10, hi=10, size=6, shift=8):
    return st.builds(CofiniteMonotoneMap, points(lo, hi, size), points(lo, hi, size),
                     st.integers(-shift, shift))


def idempotent_maps(lo=-6, hi=6, size=4):
    return points(lo, hi, size).map(lambda p: CofiniteMonotoneMap(p, p, 0))


@st.composite
def elements(draw, n=None, comps=None):
    n = draw(st.integers(1, 3)) if n is None else n
    comps = maps() if comps is None else comps
    return Element(n, tuple(draw(comps) for _ in range(n)))


@st.composite
def element_tuples(draw, k, comps=None):
    n = draw(st.integers(1, 3))
    return tuple(draw(elements(n=n, comps=comps)) for _ in range(k))


@pytest.fixture
def m():
    """Shorthand constructor: m([D], [R], c)."""
    return lambda D=(), R=(), c=0: CofiniteMonotoneMap(tuple(D), tuple(R), c)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
