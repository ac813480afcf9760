"""Session-wide corpora shared by the property suites."""

import pytest

from gtopo.spaces import enumerate_strong_gts, sample_strong_gts


@pytest.fixture(scope="session")
def census3():
    """Every strong GT on at most 3 labeled points."""
    return [s for n in range(4) for s in enumerate_strong_gts(n)]


@pytest.fixture(scope="session")
def corpus(census3):
    """The full small census plus 200 seeded random 4-point strong GTs."""
    return census3 + sample_strong_gts(4, 200, seed=8041)
