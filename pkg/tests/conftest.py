import numpy as np
import pytest

from signum.fixtures import FIXTURES
from signum.patterns import SignPattern, parse_pattern


@pytest.fixture
def pat():
    """Accessor for catalog patterns by name."""

    def get(name: str) -> SignPattern:
        return FIXTURES[name].pattern

    return get


def rows(text: str) -> SignPattern:
    return parse_pattern(text)


def random_tree_pattern(rng: np.random.Generator, n: int) -> SignPattern:
    """Random combinatorially symmetric tree pattern with zero diagonal."""
    grid = [[0] * n for _ in range(n)]
    for v in range(1, n):
        u = int(rng.integers(0, v))
        grid[u][v] = int(rng.choice((-1, 1)))
        grid[v][u] = int(rng.choice((-1, 1)))
    return SignPattern.from_rows(grid)
