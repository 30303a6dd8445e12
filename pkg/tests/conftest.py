import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from relhopf import catalog
from relhopf.tensorlin import GF, Q

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F5, F7 = GF(5), GF(7)


@pytest.fixture(scope="session")
def h4():
    return catalog.build_sweedler(5, 0)


@pytest.fixture(scope="session")
def kz2():
    return catalog.build_group_algebra(catalog.cyclic_table(2), F5)


@pytest.fixture(scope="session")
def kz3():
    return catalog.build_group_algebra(catalog.cyclic_table(3), F7)


@pytest.fixture(scope="session")
def dual_z3():
    return catalog.build_dual_group_algebra(catalog.cyclic_table(3), F7)


@pytest.fixture(scope="session")
def ground():
    return catalog.trivial_hopf(F5)


@pytest.fixture(params=[F5, F7, Q], ids=["F5", "F7", "Q"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
