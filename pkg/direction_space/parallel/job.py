from enum import Enum, auto
from typing import Any, Callable, Optional

from direction_space.parallel.task import Task


class JobStatus(Enum):
    # NOTE: wait for a worker to pick up this job and execute it
    PENDING = auto()
    EXECUTING = auto()
    DONE = auto()
    FAILED = auto()


class Job:
    """A grid cell that will be executed by a worker."""

    def __init__(self, function: Callable, task: Task):
        self.function = function
        self.task = task

        self._status = JobStatus.PENDING
        self._output = None
        self._error: Optional[BaseException] = None

    @property
    def status(self) -> JobStatus:
        return self._status

    @property
    def key(self) -> int:
        return self.task.idx

    @property
    def output(self) -> Any:
        return self._output

    @property
    def error(self) -> Optional[BaseException]:
        return self._error

    def compute(self) -> Any:
        self._status = JobStatus.EXECUTING
        try:
            self._output = self.function(*self.task.args)
            self._status = JobStatus.DONE
        except Exception as e:
            # NOTE: the executor re-raises in task order, so keep the error on the job
            self._error = e
            self._status = JobStatus.FAILED

        return self._output
