import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from direction_space.isometry.exception import Incompatible
from direction_space.isometry.inverse_limit import InverseSystem, solve_inverse_limit
from direction_space.verification import random_inverse_system


def test_solve_a_small_inverse_system():
    system = InverseSystem(levels=[["a", "b"], ["x", "y", "z"]], maps=[{"x": "a", "y": "a", "z": "b"}])

    solution = solve_inverse_limit(system)

    assert solution.thread == ("a", "x")
    assert solution.projected_sizes == (2, 3)
    assert solution.size_bound == 3
    assert solution.to_dict()["thread"] == ["a", "x"]


def test_threads_of_a_system():
    system = InverseSystem(levels=[[0], [0, 1], [0, 1, 2]], maps=[{0: 0, 1: 0}, {0: 1, 1: 0, 2: 1}])

    threads = system.threads()

    assert threads == [(0, 1, 0), (0, 0, 1), (0, 1, 2)]
    assert all(system.is_thread(thread) for thread in threads)
    assert system.is_thread((0, 0, 0)) is False
    assert system.project(0, 2, 2) == 0


@pytest.mark.parametrize(
    "levels, maps",
    [
        ([["a"], ["x", "y"]], [{"x": "a"}]),
        ([["a"], ["x"]], [{"x": "b"}]),
        ([["a"], ["x"]], []),
    ],
)
def test_incompatible_maps(levels, maps):
    with pytest.raises(Incompatible):
        InverseSystem(levels=levels, maps=maps)


def test_shortcuts_must_agree_with_the_composition():
    LEVELS = [[0], [0, 1], [0, 1]]
    MAPS = [{0: 0, 1: 0}, {0: 1, 1: 0}]

    InverseSystem(levels=LEVELS, maps=MAPS, shortcuts={(0, 2): {0: 0, 1: 0}})
    with pytest.raises(Incompatible):
        InverseSystem(levels=LEVELS, maps=MAPS, shortcuts={(0, 2): {0: 0, 1: 1}})


@settings(max_examples=100, deadline=None)
@given(rng=st.randoms(use_true_random=False), depth=st.integers(1, 8), max_size=st.integers(1, 6))
def test_selected_thread_is_a_thread(rng, depth, max_size):
    system = random_inverse_system(rng, depth=depth, max_size=max_size)

    solution = solve_inverse_limit(system)

    assert solution.thread in system.threads()
    assert all(size <= solution.size_bound for size in solution.projected_sizes)


def test_random_systems_are_seeded():
    first = random_inverse_system(random.Random(0), depth=4, max_size=3)
    second = random_inverse_system(random.Random(0), depth=4, max_size=3)

    assert first.levels == second.levels
    assert first.maps == second.maps
