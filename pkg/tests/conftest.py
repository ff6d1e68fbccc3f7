import numpy as np
import pytest

from polyregions import MatrixPolynomial

ACCEPTANCE_LINES = []


def random_matrix(rng, m):
    """Entries uniform in the complex unit square."""
    return rng.uniform(size=(m, m)) + 1j * rng.uniform(size=(m, m))


def random_monic(rng, m, n):
    mats = [random_matrix(rng, m) for _ in range(n)] + [np.eye(m, dtype=complex)]
    return MatrixPolynomial(mats)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def record():
    def _record(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
