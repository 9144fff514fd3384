from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from direction_space.isometry.exception import Incompatible


@dataclass
class InverseSystem:
    """Finite sets Y₁, ..., Y_d with maps f_{i,i+1}: Y_{i+1} → Y_i.

    `maps[i]` sends level i+1 to level i (0-based). Longer maps are composed on
    demand. `shortcuts` holds optional direct tables f_{i,j} that must agree
    with the composition.
    """

    levels: List[List[Hashable]]
    maps: List[Dict[Hashable, Hashable]]
    shortcuts: Dict[Tuple[int, int], Dict[Hashable, Hashable]] = field(default_factory=dict)

    def __post_init__(self):
        assert len(self.levels) > 0, "an inverse system needs at least one level"
        assert all(len(level) > 0 for level in self.levels), "every level must be nonempty"

        if len(self.maps) != len(self.levels) - 1:
            raise Incompatible(f"{len(self.levels)} levels need {len(self.levels) - 1} maps, got {len(self.maps)}")

        for i, mapping in enumerate(self.maps):
            lower = set(self.levels[i])
            for y in self.levels[i + 1]:
                if y not in mapping:
                    raise Incompatible(f"the map into level {i + 1} is undefined at {y}")
                if mapping[y] not in lower:
                    raise Incompatible(f"the map into level {i + 1} sends {y} outside the level")

        for (i, j), table in self.shortcuts.items():
            for y in self.levels[j]:
                if table.get(y) != self.project(i, j, y):
                    raise Incompatible(f"f_({i + 1},{j + 1}) disagrees with the composed maps at {y}")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def project(self, i: int, j: int, y: Hashable) -> Hashable:
        """f_{i,j}(y) for 0-based levels i <= j."""
        assert 0 <= i <= j < self.depth, f"levels must satisfy 0 <= {i} <= {j} < {self.depth}"
        for level in range(j - 1, i - 1, -1):
            y = self.maps[level][y]
        return y

    def threads(self) -> List[Tuple[Hashable, ...]]:
        """Every thread, one per element of the top level."""
        top = self.depth - 1
        return [tuple(self.project(i, top, y) for i in range(self.depth)) for y in self.levels[top]]

    def is_thread(self, thread: Sequence[Hashable]) -> bool:
        if len(thread) != self.depth:
            return False
        return all(self.maps[i].get(thread[i + 1]) == thread[i] for i in range(self.depth - 1))


@dataclass(frozen=True)
class InverseLimitSolution:
    thread: Tuple[Hashable, ...]
    projected_sizes: Tuple[int, ...]
    size_bound: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "thread": [str(y) for y in self.thread],
            "projected_sizes": list(self.projected_sizes),
            "size_bound": self.size_bound,
        }


def solve_inverse_limit(system: InverseSystem) -> InverseLimitSolution:
    """Pigeonhole thread selection at finite depth.

    Every element of the top level spans one thread. At each level the element
    hit by the most surviving threads is kept, ties going to the earliest
    element in the level's own order.

    Raises:
        Incompatible: the maps do not compose
    """
    top = system.depth - 1
    survivors = list(system.levels[top])
    chosen: List[Hashable] = []

    for i in range(system.depth):
        hits = Counter(system.project(i, top, y) for y in survivors)
        best: Optional[Hashable] = None
        for y in system.levels[i]:
            if hits[y] > 0 and (best is None or hits[y] > hits[best]):
                best = y

        chosen.append(best)
        survivors = [y for y in survivors if system.project(i, top, y) == best]

    thread = tuple(chosen)
    if not system.is_thread(thread):
        raise Incompatible(f"the selected sequence {thread} is not a thread")

    projected_sizes = tuple(
        len({system.project(i, top, y) for y in system.levels[top]}) for i in range(system.depth)
    )
    return InverseLimitSolution(
        thread=thread,
        projected_sizes=projected_sizes,
        size_bound=max(len(level) for level in system.levels),
    )
