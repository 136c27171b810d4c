import re

_CRITERIA = {}
_NAME = re.compile(r"test_criterion_(\d\d)_(\w+)")


def pytest_runtest_makereport(item, call):
    m = _NAME.fullmatch(item.name)
    if m is None or call.when != "call":
        return
    passed = call.excinfo is None
    _CRITERIA[int(m.group(1))] = (m.group(2).replace("_", " "), passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        label, passed = _CRITERIA[k]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {k:2d}  {label}")
