from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.metric import GeodesicPath, geodesic, is_geodesic
from direction_space.isometry.classify import require_hyperbolic
from direction_space.isometry.exception import AxisNotFoundWithinHorizon
from direction_space.isometry.isometry import Isometry
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)


@dataclass(frozen=True)
class AxisWindow:
    """A geodesic window (v₋ₘ, ..., vₘ) on which g^power shifts indices by `shift`."""

    vertices: Tuple[Vertex, ...]
    power: int
    shift: int

    @property
    def period(self) -> int:
        return self.shift

    @property
    def path(self) -> GeodesicPath:
        return GeodesicPath(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": list(self.vertices), "period": self.period, "power": self.power, "shift": self.shift}


def certify_translation(
    isometry: Isometry, vertices: Sequence[Vertex], max_power: int
) -> Optional[Tuple[int, int]]:
    """The least power q and its shift with g^q(v_i) = v_{i+shift} on the whole overlap."""
    position = {v: i for i, v in enumerate(vertices)}

    for q in range(1, max_power + 1):
        h = isometry.power(q)
        shift = position.get(h.forward(vertices[0]))
        if shift is None or shift <= 0:
            continue
        if all(h.forward(vertices[i]) == vertices[i + shift] for i in range(len(vertices) - shift)):
            return q, shift

    return None


def window_from_path(
    graph: GraphHandle, isometry: Isometry, path: Sequence[Vertex], profile: TruncationProfile
) -> AxisWindow:
    if not is_geodesic(graph, GeodesicPath(tuple(path)), horizon=len(path)):
        raise AxisNotFoundWithinHorizon(f"the path from {path[0]} to {path[-1]} is not geodesic")

    certified = certify_translation(isometry, path, profile.power_bound)
    if certified is None:
        raise AxisNotFoundWithinHorizon(
            f"no power of {isometry.label} up to {profile.power_bound} translates the window"
        )

    power, shift = certified
    return AxisWindow(vertices=tuple(path), power=power, shift=shift)


def find_axis(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> AxisWindow:
    """A geodesic window of 2R+1 vertices centred on the displacement witness.

    The window is cut from translates hᵏ(γ₀) of one geodesic γ₀ from v to h(v),
    where h = g^p and (v, p) is the hyperbolic witness of `classify`.

    Raises:
        NotHyperbolic: `isometry` is not hyperbolic
        AxisNotFoundWithinHorizon: the concatenation is not geodesic or not translated
    """
    witness = require_hyperbolic(graph, isometry, profile)
    h = isometry.power(witness.power)
    radius = profile.horizon
    pieces = -(-radius // witness.displacement)

    base = geodesic(graph, witness.vertex, h.forward(witness.vertex), profile.horizon).vertices

    ahead = list(base)
    segment = base
    for _ in range(1, pieces):
        segment = tuple(h.forward(v) for v in segment)
        ahead.extend(segment[1:])

    behind = []
    segment = base
    for _ in range(pieces):
        segment = tuple(h.backward(v) for v in segment)
        behind = list(segment[:-1]) + behind

    full = behind + ahead
    centre = len(behind)
    window = full[centre - radius : centre + radius + 1]

    logger.debug(f"axis of {isometry.label}: {len(window)} vertices around {witness.vertex}")
    return window_from_path(graph, isometry, window, profile)
