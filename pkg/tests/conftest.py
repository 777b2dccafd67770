import numpy as np
import pytest

from dmcbounds import fixed_example, random_sdd_positive, validate_channel


@pytest.fixture(scope="session")
def ex1():
    return fixed_example("example-1")


@pytest.fixture(scope="session")
def ex3():
    return fixed_example("example-3")


@pytest.fixture(scope="session")
def ex4():
    return fixed_example("example-4")


@pytest.fixture(scope="session")
def bsc01():
    return validate_channel([[0.9, 0.1], [0.1, 0.9]])


def sdd_fixture_params():
    """The 200 deterministic SDD-positive property fixtures: every
    (n, min_ratio) combination over n in 2..6 and four ratios, 10 seeds each."""
    params = []
    seed = 0
    for n in range(2, 7):
        for min_ratio in (1.5, 3.0, 10.0, 50.0):
            for _ in range(10):
                params.append((n, min_ratio, seed))
                seed += 1
    return params


@pytest.fixture(scope="session")
def sdd_fixtures():
    return [
        (n, r, s, random_sdd_positive(n, r, s)) for n, r, s in sdd_fixture_params()
    ]


def entropy2(values) -> float:
    """Independent base-2 entropy helper for expected values in tests."""
    v = np.asarray(values, dtype=float)
    v = v[v > 0]
    return float(-(v * np.log2(v)).sum())
