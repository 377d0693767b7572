import numpy as np
import pytest

from pareto_lens import SolutionSet

# Three 4-objective points used throughout: a is dominated by b, b and c
# are incomparable.
FIG1_ROWS = [
    [15.0, 31.0, 20.0, 50.0],
    [10.0, 18.0, 2.0, 30.0],
    [20.0, 5.0, 32.0, 20.0],
]


@pytest.fixture
def fig1() -> SolutionSet:
    return SolutionSet(FIG1_ROWS)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(20240811))
