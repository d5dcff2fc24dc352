import pytest

from dpa.report import run_classify
from dpa.specfile import catalog_entry

_results = {}


def classified(key, group=None):
    """Classify a catalog entry once per test session."""
    spec = catalog_entry(key)
    group = group or spec.default_group()
    if (key, group) not in _results:
        _results[key, group] = run_classify(spec, group)[1]
    return _results[key, group]


@pytest.fixture
def lct_of():
    return classified


ACCEPTANCE = []  # (criterion, passed, detail), one line each in the terminal summary


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail))
