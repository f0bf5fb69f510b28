import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "reference vectors decode to C4",
    2: "hour-glass vector",
    3: "universal encoder roundtrips",
    4: "class encoder roundtrips",
    5: "soundness fuzzing",
    6: "size claims",
    7: "lemma suites",
    8: "atlas bidirectional checks",
}

_outcomes: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.failed:
        _outcomes.setdefault(k, []).append(False)
    elif report.when == "call":
        _outcomes.setdefault(k, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        verdict = "PASS" if all(_outcomes[k]) else "FAIL"
        terminalreporter.write_line(f"criterion {k} ({CRITERIA.get(k, '')}): {verdict}")
