import re

import pytest

from ribbonroots import kernels

BACKENDS = [("python", kernels.python_backend)]
if kernels.compiled_backend is not None:
    BACKENDS.append(("cython", kernels.compiled_backend))


@pytest.fixture(params=[b for _, b in BACKENDS], ids=[n for n, _ in BACKENDS])
def backend(request):
    return request.param


_acceptance = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (n, label), outcome in sorted(_acceptance.items()):
        word = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"AC{n:<3}{word:<6}{label}")
