"""Collects the acceptance-criterion outcomes and prints one line per criterion."""

_criterion_of: dict[str, int] = {}
_outcome: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.failed:
        _outcome[n] = "FAIL"
    elif report.when == "call" and _outcome.get(n) != "FAIL":
        _outcome[n] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criterion_of:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(set(_criterion_of.values())):
        terminalreporter.write_line(f"criterion {n}: {_outcome.get(n, 'NOT RUN')}")
