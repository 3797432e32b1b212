import pytest

ACCEPTANCE = {}


@pytest.fixture
def record():
    """Record one case of an acceptance criterion for the end-of-run summary."""
    def _record(number, passed, detail):
        ACCEPTANCE.setdefault(number, []).append((passed, detail))
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        cases = ACCEPTANCE[number]
        failed = [d for ok, d in cases if not ok]
        if failed:
            line = f"criterion {number:2d}: FAIL  " + "; ".join(failed)
        else:
            line = f"criterion {number:2d}: PASS  " + cases[-1][1]
        terminalreporter.write_line(line)
