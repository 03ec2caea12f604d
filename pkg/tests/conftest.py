import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    number, name = int(match.group(1)), match.group(2)
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        verdict = "PASS" if report.outcome == "passed" else "FAIL"
        # A parametrized criterion passes only if every case passes.
        if _results.get(number, ("PASS",))[0] == "FAIL":
            verdict = "FAIL"
        _results[number] = (verdict, name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        verdict, name = _results[number]
        terminalreporter.write_line(f"{verdict} criterion {number:2d}: {name.replace('_', ' ')}")
