import pytest

from clustermorph.quiver import A1xA1, A2, A3, B2, C2

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[A2, A3, B2], ids=lambda q: q.name)
def small_quiver(request):
    return request.param


@pytest.fixture(params=[A2, A3, B2, C2, A1xA1], ids=lambda q: q.name)
def any_quiver(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
