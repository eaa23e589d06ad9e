import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dualsig.curve import CurveParams  # noqa: E402
from dualsig.scheme import SchemeParams, keygen  # noqa: E402
from dualsig.vectors import toy_base_point  # noqa: E402

from oracles import chord_tangent_table  # noqa: E402

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        ok = report.outcome == "passed"
        prev = _criteria.get((number, title), True)
        _criteria[(number, title)] = prev and ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def toy_curve():
    return CurveParams(139, 1)


@pytest.fixture(scope="session")
def toy_P():
    return toy_base_point()


@pytest.fixture(scope="session")
def toy_params(toy_curve, toy_P):
    return SchemeParams(toy_curve, 35, toy_P)


@pytest.fixture(scope="session")
def toy_keys(toy_params):
    return keygen(toy_params, 5, 7, random.Random(b"toy"))


@pytest.fixture(scope="session")
def toy_table():
    return chord_tangent_table(139)


@pytest.fixture(scope="session")
def keys32():
    from dualsig.scheme import gen_params

    rng = random.Random(b"keys32")
    params, p1, p2 = gen_params(32, rng)
    pub, priv = keygen(params, p1, p2, rng)
    return pub, priv
