import pytest

OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or rep.failed):
        n = mark.args[0]
        detail = getattr(item, "criterion_detail", "")
        if rep.failed:
            OUTCOMES[n] = ("FAIL", str(rep.longrepr).splitlines()[-1] if rep.longrepr else detail)
        elif n not in OUTCOMES:
            OUTCOMES[n] = ("PASS", detail)


def pytest_terminal_summary(terminalreporter):
    if not OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(OUTCOMES):
        status, detail = OUTCOMES[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {detail}")
