import pytest

from artin_acyl.graph import DirectedLabeledGraph
from helpers import along, cycle, path


@pytest.fixture
def gamma23():
    g = path(2, 3)
    return g, along(g)


@pytest.fixture
def gamma222():
    g = path(2, 2, 2)
    return g, along(g)


@pytest.fixture
def tri333():
    g = cycle(3, 3, 3)
    return g, DirectedLabeledGraph.from_pairs(g, [("v1", "v2"), ("v2", "v3"), ("v3", "v1")])


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line; the lines are repeated in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(n, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
