import sys
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@contextmanager
def criterion(name: str):
    """Record one acceptance criterion as PASS/FAIL for the end-of-run summary."""
    detail: list[str] = []
    try:
        yield detail
    except BaseException as exc:
        ACCEPTANCE_RESULTS.append((name, False, f"{type(exc).__name__}: {exc}".splitlines()[0]))
        raise
    ACCEPTANCE_RESULTS.append((name, True, "; ".join(detail)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
