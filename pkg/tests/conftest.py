import sys

import pytest

from locconst.groups import cyclic, direct_product, symmetric
from locconst.modules import PModule


@pytest.fixture
def z2():
    return cyclic(2)


@pytest.fixture
def s3():
    return symmetric(3)


@pytest.fixture
def v4():
    return direct_product(cyclic(2), cyclic(2))


def trivial_module(P, *factors):
    return PModule.trivial(P, tuple(factors))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
