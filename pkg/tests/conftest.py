"""Collect acceptance results and print one line per criterion."""

import pytest

TITLES = {
    1: "golden example, every algorithm",
    2: "five-term normal form of [145/236]",
    3: "Rota triangular system",
    4: "coordinate oracle equivalence",
    5: "leading term is the column sort",
    6: "cross-algorithm agreement",
    7: "cb statistics [14, 7, 2]",
    8: "Turnbull-Young polynomial",
    9: "xi recursion equals cb coefficients",
    10: "property suites",
}

_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and report.passed):
        return
    n = marker.args[0]
    _results[n] = _results.get(n, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status = "PASS" if _results[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {TITLES.get(n, '')}")
