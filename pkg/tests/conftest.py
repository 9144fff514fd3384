import pytest

from direction_space.instances.example_group import ExampleGroupInstance
from direction_space.instances.tree import TreeInstance
from direction_space.profile import TruncationProfile


@pytest.fixture(scope="session")
def tree():
    DEGREE = 3
    return TreeInstance(DEGREE)


@pytest.fixture(scope="session")
def example_group():
    ORDER = 2
    return ExampleGroupInstance(ORDER)


@pytest.fixture
def profile():
    return TruncationProfile()


@pytest.fixture
def small_profile():
    return TruncationProfile(horizon=6, power_bound=12, exponent_bound=24)
