import os
from typing import Any, Callable, List, Optional, Sequence

from direction_space.constants import GRID_MAX_WORKERS, GRID_MIN_WORKERS, THREADS_ENV
from direction_space.parallel.job import Job, JobStatus
from direction_space.parallel.task import Task
from direction_space.parallel.worker import WorkerManager


def get_num_workers() -> int:
    value = os.getenv(THREADS_ENV)
    if value is None or value.strip() == "":
        return GRID_MIN_WORKERS

    num_workers = int(value)
    assert num_workers >= 1, f"{THREADS_ENV} must be a positive integer, got {value}"
    return min(num_workers, GRID_MAX_WORKERS)


def run_grid(function: Callable, cells: Sequence[Any], num_workers: Optional[int] = None) -> List[Any]:
    """Evaluate `function` on every cell and return the outputs in cell order.

    A cell that is a tuple is unpacked into positional arguments. The first
    failure in cell order is re-raised, whatever order the workers finished in.
    """
    tasks = [Task(idx, cell if isinstance(cell, tuple) else (cell,)) for idx, cell in enumerate(cells)]
    jobs = [Job(function, task) for task in tasks]
    num_workers = get_num_workers() if num_workers is None else num_workers

    if num_workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            job.compute()
    else:
        manager = WorkerManager(num_workers=min(num_workers, len(jobs)))
        manager.spawn()
        for job in jobs:
            manager.submit(job)
        for _ in jobs:
            manager.finished_jobs.get()
        manager.destroy()

    for job in jobs:
        if job.status is JobStatus.FAILED:
            raise job.error

    return [job.output for job in jobs]
