import numpy as np
import pytest

from hilbertsym import Grid1D, make_probes


@pytest.fixture(scope="session")
def grid():
    # fast default for unit tests; acceptance uses the full suite sizes
    return Grid1D.from_interval(-40.0, 40.0, 1024)


@pytest.fixture(scope="session")
def big_grid():
    return Grid1D.from_interval(-40.0, 40.0, 4096)


@pytest.fixture(scope="session")
def packets(grid):
    return make_probes("gaussian-packet", seed=101, count=6, grid=grid)


@pytest.fixture(scope="session")
def bandlimited(grid):
    return make_probes("random-bandlimited", seed=102, count=6, grid=grid)


@pytest.fixture(scope="session")
def trig_probes():
    return make_probes("trig-poly", seed=103, count=6, K=32)


def rel_err(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))
