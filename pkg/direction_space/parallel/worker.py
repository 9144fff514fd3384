import threading
from abc import ABC, abstractclassmethod
from queue import Queue
from typing import List, Optional

from direction_space.constants import GRID_MIN_WORKERS
from direction_space.parallel.job import Job

# NOTE: a worker stops when it draws this from the queue
_STOP = None


class Worker(threading.Thread):
    """A worker that executes jobs until it draws the stop sentinel."""

    def __init__(self, pending_jobs: Queue, finished_jobs: Queue, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._pending_jobs = pending_jobs
        self._finished_jobs = finished_jobs
        self._running = False

    @property
    def is_running(self) -> bool:
        return self._running

    def run(self):
        while True:
            job: Optional[Job] = self._pending_jobs.get()
            if job is _STOP:
                break

            self._running = True
            job.compute()
            self._running = False
            self._finished_jobs.put(job)


class BaseWorkerManager(ABC):
    @abstractclassmethod
    def spawn(self):
        raise NotImplementedError

    @abstractclassmethod
    def destroy(self):
        raise NotImplementedError


class WorkerManager(BaseWorkerManager):
    def __init__(self, num_workers: int = GRID_MIN_WORKERS):
        assert num_workers >= 1, f"num_workers must be at least 1, got {num_workers}"

        # job created but not yet picked up
        self._pending_jobs = Queue()
        # job executed, successfully or not
        self._finished_jobs = Queue()
        self._worker_pool: List[Worker] = []
        self.num_workers = num_workers

    @property
    def pending_jobs(self) -> Queue:
        return self._pending_jobs

    @property
    def finished_jobs(self) -> Queue:
        return self._finished_jobs

    @property
    def worker_pool(self) -> List[Worker]:
        return self._worker_pool

    def spawn(self):
        for _ in range(self.num_workers):
            self._spawn_a_worker()

    def _spawn_a_worker(self):
        worker = Worker(self._pending_jobs, self._finished_jobs, daemon=True)
        worker.start()
        self._worker_pool.append(worker)

    def submit(self, job: Job):
        self._pending_jobs.put(job)

    def destroy(self):
        for _ in self._worker_pool:
            self._pending_jobs.put(_STOP)

        worker_pool_copy = self._worker_pool.copy()
        for worker in worker_pool_copy:
            worker.join()
            self._worker_pool.remove(worker)
