from dataclasses import dataclass, field
from typing import Any, Tuple


@dataclass(frozen=True)
class Task:
    """One cell of a computation grid, identified by its position."""

    idx: int
    args: Tuple[Any, ...] = field(default_factory=tuple)
