from dataclasses import dataclass
from typing import Any, Dict, Tuple

from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.hyperbolicity import sequence_converges_at_infinity
from direction_space.graph.metric import gromov_product
from direction_space.isometry.classify import require_hyperbolic
from direction_space.isometry.exception import ConvergenceCheckFailed
from direction_space.isometry.isometry import Isometry
from direction_space.profile import TruncationProfile


@dataclass(frozen=True)
class TruncatedEnd:
    """The orbit g(p), g²(p), ..., gᴺ(p) of the basepoint standing in for ω₊(g)."""

    graph: GraphHandle
    orbit: Tuple[Vertex, ...]

    @property
    def tail(self) -> Tuple[Vertex, ...]:
        return self.orbit[len(self.orbit) // 2 :]

    def to_dict(self) -> Dict[str, Any]:
        return {"orbit": list(self.orbit)}


def attracting_end(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> TruncatedEnd:
    """
    Raises:
        NotHyperbolic: `isometry` is not hyperbolic
        ConvergenceCheckFailed: the orbit does not converge at infinity at the profile threshold
    """
    require_hyperbolic(graph, isometry, profile)

    orbit = []
    vertex = graph.basepoint
    for _ in range(profile.power_bound):
        vertex = isometry.forward(vertex)
        orbit.append(vertex)

    if not sequence_converges_at_infinity(graph, orbit, profile.threshold, profile.horizon):
        raise ConvergenceCheckFailed(
            f"the orbit of {graph.basepoint} under {isometry.label} does not pass threshold {profile.threshold}"
        )

    return TruncatedEnd(graph=graph, orbit=tuple(orbit))


def repelling_end(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> TruncatedEnd:
    return attracting_end(graph, isometry.inverse(), profile)


def same_end(first: TruncatedEnd, second: TruncatedEnd, threshold: int) -> bool:
    assert first.graph is second.graph, "both ends must come from the same graph"

    basepoint = first.graph.basepoint
    return all(
        gromov_product(first.graph, u, w, basepoint) >= threshold for u in first.tail for w in second.tail
    )
