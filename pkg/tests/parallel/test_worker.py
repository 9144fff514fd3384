import time

import pytest

from direction_space.parallel.job import Job, JobStatus
from direction_space.parallel.task import Task
from direction_space.parallel.worker import WorkerManager


def test_compute_a_job():
    job = Job(lambda x: x + 1, Task(0, (1,)))

    assert job.status is JobStatus.PENDING
    assert job.key == 0

    output = job.compute()

    assert output == 2
    assert job.output == 2
    assert job.status is JobStatus.DONE
    assert job.error is None


def test_a_failing_job_keeps_its_error():
    def fail():
        raise RuntimeError("boom")

    job = Job(fail, Task(3))

    job.compute()

    assert job.status is JobStatus.FAILED
    assert isinstance(job.error, RuntimeError)
    assert job.output is None


def test_spawn_and_destroy_workers():
    NUM_WORKERS = 2

    manager = WorkerManager(num_workers=NUM_WORKERS)
    manager.spawn()

    assert len(manager.worker_pool) == NUM_WORKERS
    assert all(worker.is_alive() for worker in manager.worker_pool)

    manager.destroy()

    assert len(manager.worker_pool) == 0


def test_workers_execute_submitted_jobs():
    NUM_JOBS = 6

    def compute(x):
        time.sleep(0.001)
        return 2 * x

    manager = WorkerManager(num_workers=3)
    manager.spawn()
    jobs = [Job(compute, Task(i, (i,))) for i in range(NUM_JOBS)]
    for job in jobs:
        manager.submit(job)

    finished = [manager.finished_jobs.get() for _ in range(NUM_JOBS)]
    manager.destroy()

    assert sorted(job.key for job in finished) == list(range(NUM_JOBS))
    assert [job.output for job in jobs] == [2 * i for i in range(NUM_JOBS)]
    assert all(job.status is JobStatus.DONE for job in jobs)


def test_worker_manager_needs_a_worker():
    with pytest.raises(AssertionError):
        WorkerManager(num_workers=0)
