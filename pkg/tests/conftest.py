import math
import time

import numpy as np
import pytest

import fqwell as fq
from fqwell.spectrum import solve_many

SUITE_SEED = 20250810
SUITE_SIZE = 1000


@pytest.fixture(scope="session")
def random_wells():
    """The 1000-well randomized suite: log-uniform G in (1e-3, 1e6), alpha in (1.001, 2]."""
    rng = np.random.default_rng(SUITE_SEED)
    gs = np.exp(rng.uniform(math.log(1e-3), math.log(1e6), SUITE_SIZE))
    alphas = rng.uniform(1.001, 2.0, SUITE_SIZE)
    return [
        fq.DimensionlessWell(g=float(g), alpha=float(a)) for g, a in zip(gs, alphas)
    ]


@pytest.fixture(scope="session")
def solved_suite(random_wells):
    """(sigma, eta) arrays for every suite well plus the wall-clock solve time."""
    start = time.perf_counter()
    results = solve_many(random_wells)
    elapsed = time.perf_counter() - start
    return results, elapsed
