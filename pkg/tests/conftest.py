import fleet


def pytest_terminal_summary(terminalreporter):
    if not fleet.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(fleet.RESULTS):
        ok, detail = fleet.RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
