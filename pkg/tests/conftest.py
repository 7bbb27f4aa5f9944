import re
from collections import defaultdict

CRITERIA = {
    1: "wedge chart through stem 70",
    2: "image enumeration vs alpha predicate",
    3: "coweight equation vs alpha predicate",
    4: "phi preserves degrees of v_n",
    5: "two-term localization degrees and image test",
    6: "witness suite and rewriting",
    7: "known small cases",
    8: "alpha properties",
    9: "distinct dots and Lambda degrees",
}

_results: dict[int, list[tuple[str, str]]] = defaultdict(list)
_CRIT_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _CRIT_RE.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[int(m.group(1))].append((m.group(2), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        checks = _results.get(n)
        if not checks:
            continue
        failed = [name for name, outcome in checks if outcome != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        detail = "" if not failed else f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}{detail}")
