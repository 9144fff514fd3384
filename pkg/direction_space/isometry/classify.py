from dataclasses import dataclass
from enum import Enum, auto
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from direction_space.graph.exception import Unreachable
from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.metric import ball, distance
from direction_space.isometry.exception import NotHyperbolic
from direction_space.isometry.isometry import Isometry, validate_isometry
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)


class IsometryKind(Enum):
    ELLIPTIC = auto()
    HYPERBOLIC = auto()
    # NOTE: parabolicity is never certified inside a finite window
    UNDETERMINED = auto()


@dataclass(frozen=True)
class EllipticWitness:
    vertex: Vertex
    orbit: Tuple[Vertex, ...]
    diameter: int

    def to_dict(self) -> Dict[str, Any]:
        return {"vertex": self.vertex, "orbit": list(self.orbit), "diameter": self.diameter}


@dataclass(frozen=True)
class HyperbolicWitness:
    vertex: Vertex
    displacement: int
    power: int

    def to_dict(self) -> Dict[str, Any]:
        return {"vertex": self.vertex, "displacement": self.displacement, "power": self.power}


@dataclass(frozen=True)
class IsometryClass:
    kind: IsometryKind
    witness: Optional[Any] = None
    diagnostics: str = ""

    @property
    def is_elliptic(self) -> bool:
        return self.kind is IsometryKind.ELLIPTIC

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind is IsometryKind.HYPERBOLIC

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.name.capitalize(),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "diagnostics": self.diagnostics,
        }


def _elliptic_witness(
    graph: GraphHandle, isometry: Isometry, vertex: Vertex, profile: TruncationProfile
) -> Optional[EllipticWitness]:
    orbit = [vertex]
    image = isometry.forward(vertex)
    for _ in range(profile.power_bound):
        if image == vertex:
            break
        orbit.append(image)
        image = isometry.forward(image)
    else:
        return None

    try:
        diameter = max(distance(graph, a, b, profile.horizon) for a in orbit for b in orbit)
    except Unreachable:
        return None

    if diameter > profile.horizon:
        return None
    return EllipticWitness(vertex=vertex, orbit=tuple(orbit), diameter=diameter)


def _grows_linearly(
    graph: GraphHandle, isometry: Isometry, vertex: Vertex, displacement: int, profile: TruncationProfile
) -> bool:
    image = vertex
    for k in range(1, profile.power_bound + 1):
        image = isometry.forward(image)
        try:
            if distance(graph, vertex, image, profile.horizon) != k * displacement:
                return False
        except Unreachable:
            return False
    return True


def displacements(graph: GraphHandle, isometry: Isometry, vertices: List[Vertex], horizon: int) -> Dict[Vertex, int]:
    moved = {}
    for v in vertices:
        try:
            moved[v] = distance(graph, v, isometry.forward(v), horizon)
        except Unreachable:
            continue
    return moved


def _hyperbolic_witness(
    graph: GraphHandle, isometry: Isometry, scanned: List[Vertex], profile: TruncationProfile
) -> Optional[HyperbolicWitness]:
    # NOTE: powers are tried in increasing order, the first success is the reported power
    for p in range(1, profile.power_bound + 1):
        h = isometry.power(p)
        moved = displacements(graph, h, scanned, profile.horizon)
        if len(moved) == 0:
            continue

        least = min(moved.values())
        if least == 0:
            return None

        for v in sorted(v for v, d in moved.items() if d == least):
            if _grows_linearly(graph, h, v, least, profile):
                return HyperbolicWitness(vertex=v, displacement=least, power=p)

    return None


@lru_cache(maxsize=1024)
def classify(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> IsometryClass:
    """Elliptic, hyperbolic or undetermined, from the horizon ball around the basepoint.

    Raises:
        InvalidIsometry: `isometry` breaks adjacency on the ball
    """
    validate_isometry(graph, isometry, profile.horizon)
    scanned = ball(graph, graph.basepoint, profile.horizon)

    witness = _elliptic_witness(graph, isometry, graph.basepoint, profile)
    if witness is not None:
        return IsometryClass(IsometryKind.ELLIPTIC, witness)

    witness = _hyperbolic_witness(graph, isometry, scanned, profile)
    if witness is not None:
        logger.debug(f"{isometry.label} is hyperbolic: {witness}")
        return IsometryClass(IsometryKind.HYPERBOLIC, witness)

    for v in scanned:
        witness = _elliptic_witness(graph, isometry, v, profile)
        if witness is not None:
            return IsometryClass(IsometryKind.ELLIPTIC, witness)

    diagnostics = (
        f"no closed orbit of diameter <= {profile.horizon} and no linear displacement growth "
        f"up to power {profile.power_bound} on {len(scanned)} vertices"
    )
    logger.warning(f"{isometry.label} is undetermined: {diagnostics}")
    return IsometryClass(IsometryKind.UNDETERMINED, diagnostics=diagnostics)


def require_hyperbolic(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> HyperbolicWitness:
    isometry_class = classify(graph, isometry, profile)
    if not isometry_class.is_hyperbolic:
        raise NotHyperbolic(f"{isometry.label} is {isometry_class.kind.name.lower()}")
    return isometry_class.witness


def translation_length(graph: GraphHandle, isometry: Isometry, profile: TruncationProfile) -> int:
    """min over the horizon ball of d(v, g(v)) for a hyperbolic g."""
    require_hyperbolic(graph, isometry, profile)
    scanned = ball(graph, graph.basepoint, profile.horizon)
    return min(displacements(graph, isometry, scanned, profile.horizon).values())
