"""
Shared fixtures for extraconn tests.
"""

import pytest

from extraconn.app import create_config
from extraconn.families import gen_named
from extraconn.services.generators import gen_random_connected


@pytest.fixture
def config():
    """Default configuration, independent of any local .env overrides."""
    return create_config(
        {
            "JOBS": 1,
            "NAIVE_MAX_ORDER": 12,
            "PRUNED_MAX_ORDER": 20,
            "ITERATE_MAX_ORDER": 10_000,
            "ENUMERATE_MAX_ORDER": 6,
            "LOG_LEVEL": "WARNING",
            "LOG_FILE": None,
        }
    )


@pytest.fixture
def c6():
    return gen_named("cycle:6")


@pytest.fixture
def p5():
    return gen_named("path:5")


@pytest.fixture
def k4():
    return gen_named("complete:4")


@pytest.fixture
def petersen():
    return gen_named("petersen")


@pytest.fixture(scope="session")
def random_graphs():
    """200 seeded connected G(n, 0.5) samples with n cycling through 3..8."""
    out = []
    for index in range(200):
        n = 3 + index % 6
        G, seed = gen_random_connected(n, 0.5, seed=1000 * index)
        out.append((seed, G))
    return out
