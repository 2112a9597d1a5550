import numpy as np
import pytest

from zetadiv import ZetaMeanSquare, sieve_divisors


@pytest.fixture(scope="session")
def table_small():
    """Divisor table to 1e5: enough for Voronoi suites and Atkinson at T<=5000."""
    return sieve_divisors(10**5)


@pytest.fixture(scope="session")
def table_big():
    """Divisor table to 1e7 for the full divisor identity suite."""
    return sieve_divisors(10**7)


@pytest.fixture(scope="session")
def ms_integrator():
    """Shared cumulative quadrature cache (default 0.25 chunks)."""
    return ZetaMeanSquare()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240811)
