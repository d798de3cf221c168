import itertools

import pytest

from asmposet import _kernels


def brute_is_alternating(s):
    """Prefix-sum characterisation: sums stay in {0,1} and end at 1."""
    acc = 0
    for a in s:
        acc += a
        if acc not in (0, 1):
            return False
    return acc == 1


def brute_alternating(n):
    return [s for s in itertools.product((-1, 0, 1), repeat=n) if brute_is_alternating(s)]


@pytest.fixture(params=sorted(_kernels.backends()))
def kernels(request):
    return _kernels.backends()[request.param]


_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label, passed, detail)."""
    def record(label, passed, detail=""):
        _CRITERIA.append((label, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'} {label}: {detail}")
        assert passed, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {label}: {detail}")
