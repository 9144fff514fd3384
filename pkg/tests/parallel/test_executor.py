import time

import pytest

from direction_space.constants import GRID_MAX_WORKERS, THREADS_ENV
from direction_space.parallel.executor import get_num_workers, run_grid


def square(x):
    return x * x


def slow_square(x):
    # NOTE: later cells finish first
    time.sleep(0.01 * (5 - x))
    return x * x


def test_run_grid_in_a_single_thread():
    assert run_grid(square, [1, 2, 3], num_workers=1) == [1, 4, 9]
    assert run_grid(square, [], num_workers=1) == []


@pytest.mark.parametrize("num_workers", [2, 4])
def test_run_grid_keeps_cell_order(num_workers):
    CELLS = [0, 1, 2, 3, 4]

    outputs = run_grid(slow_square, CELLS, num_workers=num_workers)

    assert outputs == [0, 1, 4, 9, 16]


def test_tuple_cells_are_unpacked():
    assert run_grid(lambda a, b: a + b, [(1, 2), (3, 4)], num_workers=2) == [3, 7]


@pytest.mark.parametrize("num_workers", [1, 3])
def test_first_failure_in_cell_order_is_reraised(num_workers):
    def fail_on_large(x):
        if x >= 2:
            raise ValueError(f"cell {x}")
        return x

    with pytest.raises(ValueError, match="cell 2"):
        run_grid(fail_on_large, [0, 1, 2, 3, 4], num_workers=num_workers)


@pytest.mark.parametrize("value, expected", [("4", 4), ("1", 1), ("1000", GRID_MAX_WORKERS), ("", 1)])
def test_num_workers_from_the_environment(monkeypatch, value, expected):
    monkeypatch.setenv(THREADS_ENV, value)
    assert get_num_workers() == expected


def test_num_workers_defaults_to_one(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert get_num_workers() == 1


def test_num_workers_must_be_positive(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "0")
    with pytest.raises(AssertionError):
        get_num_workers()
