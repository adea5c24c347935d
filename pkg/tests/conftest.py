import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS = []


def record_criterion(number, title, ok, detail=""):
    _RESULTS.append((number, title, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_RESULTS):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title}"
        if not ok and detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
