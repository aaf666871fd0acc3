import pytest

from rscodec.code import CodeParams, Method
from rscodec.gf import make_field


@pytest.fixture(scope="session")
def gf7():
    return make_field(7, 1, alpha=3)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def rs6(gf7):
    """GF(7) RS(6,2,5), spectral."""
    return CodeParams(gf7, 2, 1, Method.SPECTRAL)


@pytest.fixture(scope="session")
def rs6r(gf7):
    return CodeParams(gf7, 2, 1, Method.REMAINDER)


@pytest.fixture(scope="session")
def rs7(gf8):
    """GF(8) RS(7,3,5), spectral."""
    return CodeParams(gf8, 3, 1, Method.SPECTRAL)


@pytest.fixture(scope="session")
def rs7r(gf8):
    return CodeParams(gf8, 3, 1, Method.REMAINDER)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
