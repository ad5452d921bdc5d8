from itertools import permutations
from fractions import Fraction

import pytest

from coblegeom.modular import segre_pipeline

ACCEPTANCE_LINES: list[str] = []


def leibniz_det(rows):
    """Determinant by the permutation expansion; independent of elimination."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


@pytest.fixture(scope="session")
def pipeline():
    return segre_pipeline(0)


@pytest.fixture(scope="session")
def kappa_basis(pipeline):
    return pipeline.kappa_basis


@pytest.fixture(scope="session")
def cubic(pipeline):
    return pipeline.cubic


@pytest.fixture(scope="session")
def quartic(pipeline):
    return pipeline.dual_quartic


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
