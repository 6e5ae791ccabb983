import numpy as np
import pytest

from hullcodes import GF, LinearCode, MatGF
from hullcodes.matgf import rank

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number = getattr(report, "criterion_number", None)
    if number is not None:
        _CRITERIA[number] = ("PASS" if report.passed else "FAIL", report.criterion_text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion_number = marker.args[0]
        report.criterion_text = marker.args[1]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, text = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {text}")


def random_code(rng: np.random.Generator, field, n: int, k: int) -> LinearCode:
    """Uniform full-rank k x n generator (rejection sampled)."""
    while True:
        G = MatGF(field, rng.integers(0, field.q, size=(k, n)))
        if rank(G) == k:
            return LinearCode(G)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=[4, 8, 16], ids=lambda q: f"GF{q}")
def even_field(request):
    return GF(request.param)
