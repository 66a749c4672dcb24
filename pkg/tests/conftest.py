import pytest
from hypothesis import strategies as st

from chargraph.graph import PrimeGraph
from chargraph.oracle import graph_from_code


@st.composite
def small_graphs(draw, max_vertices=8):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = n * (n - 1) // 2
    code = draw(st.integers(min_value=0, max_value=(1 << pairs) - 1)) if pairs else 0
    return graph_from_code(n, code)


def make(vertices, edges, label=""):
    return PrimeGraph.from_edges(vertices, edges, label)


@pytest.fixture
def c5():
    return make([1, 2, 3, 4, 5], [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], "C5")


@pytest.fixture
def triangle_pendant():
    # K3 on a=1, b=2, c=3 plus the edge c-d with d=4
    return make([1, 2, 3, 4], [(1, 2), (2, 3), (1, 3), (3, 4)])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # exposes rep_call so fixtures can see the test outcome at teardown
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
