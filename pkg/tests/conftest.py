import pytest

from rightloop.core import Permutation, RightLoopTable
from rightloop.corpus import corpus, cyclic, symmetric3
from rightloop.transversal import FiniteGroup
from rightloop.twist import TwistSpec, twist


@pytest.fixture(scope="session")
def all_loops():
    return corpus()


@pytest.fixture
def z6():
    return RightLoopTable(cyclic(6))


@pytest.fixture
def neg6():
    return Permutation(tuple((-i) % 6 for i in range(6)))


@pytest.fixture
def z6_twisted(z6, neg6):
    return twist(z6, TwistSpec({2}, neg6))


@pytest.fixture
def s3():
    return FiniteGroup(symmetric3())


ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_makereport(item, call):
    crit = item.get_closest_marker("criterion")
    if crit is not None and call.when == "call":
        status = "PASS" if call.excinfo is None else "FAIL"
        ACCEPTANCE[crit.args[0]] = status


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for label in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
            terminalreporter.write_line(f"{ACCEPTANCE[label]}  {label}")
