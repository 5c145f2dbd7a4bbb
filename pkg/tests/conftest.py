import numpy as np
import pytest


def random_gl(rng, cond_max=50.0, unimodular=False, positive=False):
    """Gaussian 2x2 matrix with condition number below ``cond_max``."""
    while True:
        g = rng.normal(size=(2, 2))
        d = np.linalg.det(g)
        if abs(d) < 1e-3 or np.linalg.cond(g) >= cond_max:
            continue
        if positive and d < 0:
            g = g[::-1].copy()
            d = -d
        if unimodular:
            if d < 0:
                g[0] = -g[0]
            g = g / np.sqrt(abs(d))
        return g


def random_sym(rng):
    a = rng.normal(size=(2, 2))
    return a + a.T


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
