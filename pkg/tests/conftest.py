import mpmath
import pytest

from legasym import VERIFY


@pytest.fixture(autouse=True)
def verify_precision():
    """Every test starts at the 40-digit profile and leaves the global context as found."""
    saved = mpmath.mp.prec
    VERIFY.install()
    yield
    mpmath.mp.prec = saved


def rel(a, b):
    return abs(a - b) / abs(b)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in mod.TITLES.items():
        ok, detail = mod.RESULTS.get(n, (False, "not run or errored before reporting"))
        terminalreporter.write_line(f"CRITERION {n} {'PASS' if ok else 'FAIL'}: {title} -- {detail}")
