import pytest

from permutomino.verification import materialize_levels


@pytest.fixture(scope="session")
def levels():
    """All convex permutominoes of sizes 1..6, keyed by size."""
    return materialize_levels(6)
