import pytest

from signedchordal import build_graph


def cycle(n, sign="-"):
    return build_graph(n, [(i, (i + 1) % n, sign) for i in range(n)])


@pytest.fixture
def neg_c4():
    return cycle(4, "-")


@pytest.fixture
def pos_k22():
    return build_graph(4, [(0, 2, "+"), (0, 3, "+"), (1, 2, "+"), (1, 3, "+")])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
