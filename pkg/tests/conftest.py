import pytest
from hypothesis import strategies as st

from hyperlines.exactpoly import BiPoly, kernels


@pytest.fixture(params=sorted(kernels.AVAILABLE))
def backend(request):
    with kernels.using_backend(request.param):
        yield request.param


def bipolys(max_degree=12, max_terms=8, coeffs=st.integers(-50, 50)):
    exps = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
        lambda e: e[0] + e[1] <= max_degree
    )
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(BiPoly)


def symmetric_bipolys(max_degree=12, **kw):
    return bipolys(max_degree, **kw).map(lambda x: x + x.swap())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
