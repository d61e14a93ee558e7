import os
import re
import sys

import pytest
from hypothesis import HealthCheck, settings

from hopftwist.field import GF, Q

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CORPUS = os.path.join(os.path.dirname(__file__), os.pardir, "corpus")


@pytest.fixture(params=[Q, GF(5)], ids=["Q", "GF5"])
def field(request):
    return request.param


@pytest.fixture
def corpus():
    return lambda name: os.path.join(CORPUS, name)


# one PASS/FAIL line per acceptance criterion, printed after the run
_CRITERIA = {}
_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or (report.when != "call" and not report.failed):
        return
    n = int(m[1])
    title = m[2].replace("_", " ")
    failed = report.failed or _CRITERIA.get(n, (None, "PASS"))[1] == "FAIL"
    _CRITERIA[n] = (title, "FAIL" if failed else ("PASS" if report.passed else "SKIP"))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
