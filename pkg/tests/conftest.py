from collections import defaultdict

import pytest

CRITERIA = {
    1: "Table I reproduction",
    2: "Table II reproduction (one printed-cell discrepancy)",
    3: "Table III reproduction",
    4: "ring cardinalities by enumeration",
    5: "metric axioms and weights of w",
    6: "closed-form sphere sizes against the oracle",
    7: "solution lists of the equality searches (printed cardinalities)",
    8: "nonexistence scans (printed cardinalities)",
    9: "decoder round trip",
    10: "minimum distances",
}

_criterion_of: dict[str, int] = {}
_outcomes: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    num = _criterion_of.get(report.nodeid)
    if num is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[num].append((report.nodeid, report.outcome))


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num, title in CRITERIA.items():
        results = _outcomes.get(num)
        if not results:
            tr.write_line(f"criterion {num:>2}  NOT RUN  {title}")
            continue
        passed = sum(outcome == "passed" for _, outcome in results)
        status = "PASS" if passed == len(results) else "FAIL"
        tr.write_line(f"criterion {num:>2}  {status:<7}  {title} ({passed}/{len(results)} checks)")
        if status == "FAIL":
            for nodeid, outcome in results:
                if outcome != "passed":
                    tr.write_line(f"               {outcome}: {nodeid.split('::', 1)[1]}")
