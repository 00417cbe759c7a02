import pytest

from tautilt.algebra import algebra_from_text
from tautilt.homology import enumerate_indecomposables
from tautilt.regression import bundled_algebra
from tautilt.subcat import parse_spec
from tautilt.tau_tilt import fac_context, module_context

CRITERIA = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


SQUARE = """
vertices: 4
arrow: a 1 2
arrow: b 1 3
arrow: c 2 4
arrow: d 3 4
relation: a*c - b*d
"""

LOOP = """
vertices: 1
arrow: x 1 1
relation: x*x*x
"""

CYCLE = """
vertices: 2
arrow: a 1 2
arrow: b 2 1
relation: a*b
relation: b*a*b
"""


@pytest.fixture(scope="session")
def lam():
    return bundled_algebra("lambda6")


@pytest.fixture(scope="session")
def pool(lam):
    return enumerate_indecomposables(lam)


@pytest.fixture(scope="session")
def mod(pool):
    return module_context(pool)


@pytest.fixture(scope="session")
def E(pool):
    return fac_context(pool, parse_spec(pool, "2+2/3+1/2"))


@pytest.fixture(scope="session")
def spec(pool):
    return lambda s: parse_spec(pool, s)


@pytest.fixture(scope="session")
def a3_pool():
    return enumerate_indecomposables(bundled_algebra("a3"))


@pytest.fixture(scope="session")
def extra_algebras():
    return [algebra_from_text(SQUARE, "square"), algebra_from_text(LOOP, "loop"),
            algebra_from_text(CYCLE, "cycle")]


@pytest.fixture(scope="session")
def extra_pools(extra_algebras):
    return [enumerate_indecomposables(a) for a in extra_algebras]
