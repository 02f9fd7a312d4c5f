import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(verdicts[n])
    for table in getattr(mod, "TABLES", []):
        terminalreporter.write_line("")
        terminalreporter.write_line("fiber-singleton status per type:")
        for line in table.splitlines():
            terminalreporter.write_line(line)
