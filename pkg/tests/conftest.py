import numpy as np
import pytest

from ffdecide import FFN, builtin_case


@pytest.fixture(scope="session")
def turkiye():
    return builtin_case("turkiye-energy-poverty")


def sample_valid_pairs(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 2) array of valid (mu, nu) pairs covering the cube-bounded domain."""
    mu = rng.uniform(0.0, 1.0, n)
    nu_cap = np.cbrt(1.0 - mu**3)
    nu = rng.uniform(0.0, 1.0, n) * nu_cap
    return np.column_stack([mu, nu])


def sample_ffns(rng: np.random.Generator, n: int) -> list[FFN]:
    return [FFN(m, v) for m, v in sample_valid_pairs(rng, n)]
