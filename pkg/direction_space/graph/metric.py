from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from direction_space.constants import HORIZON
from direction_space.graph.exception import NotGeodesic, Unreachable
from direction_space.graph.graph import GraphHandle, Vertex


@dataclass(frozen=True)
class GeodesicPath:
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        assert len(self.vertices) > 0, "a path has at least one vertex"

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def reversed(self) -> "GeodesicPath":
        return GeodesicPath(tuple(reversed(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, idx):
        return self.vertices[idx]


@dataclass(frozen=True)
class GeodesicInterval:
    """Every vertex and edge lying on some geodesic from `source` to `target`."""

    source: Vertex
    target: Vertex
    layers: Tuple[Tuple[Vertex, ...], ...]
    edges: Tuple[Tuple[Vertex, Vertex], ...]

    @property
    def vertices(self) -> List[Vertex]:
        return sorted(v for layer in self.layers for v in layer)


@lru_cache(maxsize=8192)
def _bfs(graph: GraphHandle, source: Vertex, horizon: int) -> Dict[Vertex, int]:
    dist = {source: 0}
    queue = deque([source])

    while queue:
        u = queue.popleft()
        if dist[u] == horizon:
            continue
        for w in graph.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)

    return dist


def distance(graph: GraphHandle, u: Vertex, v: Vertex, horizon: int = HORIZON) -> int:
    """Length of a shortest path from `u` to `v`.

    Graphs with a closed-form metric answer directly; all others run a
    breadth-first search that gives up beyond `horizon`.

    Raises:
        Unreachable: no path of length at most `horizon` exists
    """
    if u == v:
        return 0

    closed = graph.closed_form_distance(u, v)
    if closed is not None:
        return closed

    dist = _bfs(graph, u, horizon)
    if v not in dist:
        raise Unreachable(horizon, f"{v} is not within {horizon} of {u}")
    return dist[v]


def _distance_to(graph: GraphHandle, target: Vertex, horizon: int) -> Callable[[Vertex], Optional[int]]:
    """Return a lookup x -> d(x, target), None when out of reach."""
    if graph.closed_form_distance(target, target) is not None:
        return lambda x: graph.closed_form_distance(x, target)

    dist = _bfs(graph, target, horizon)
    return dist.get


def geodesic(graph: GraphHandle, u: Vertex, v: Vertex, horizon: int = HORIZON) -> GeodesicPath:
    """A shortest path from `u` to `v`, taking the smallest code at every step."""
    length = distance(graph, u, v, horizon)
    to_target = _distance_to(graph, v, horizon)

    path = [u]
    current = u
    for remaining in range(length, 0, -1):
        current = min(w for w in graph.neighbors(current) if to_target(w) == remaining - 1)
        path.append(current)

    return GeodesicPath(tuple(path))


def is_geodesic(graph: GraphHandle, path: GeodesicPath, horizon: int = HORIZON) -> bool:
    for a, b in zip(path.vertices, path.vertices[1:]):
        if not graph.is_edge(a, b):
            return False
    try:
        return distance(graph, path.start, path.end, horizon) == path.length
    except Unreachable:
        return False


def validate_geodesic(graph: GraphHandle, path: GeodesicPath, horizon: int = HORIZON):
    if not is_geodesic(graph, path, horizon):
        raise NotGeodesic(f"path from {path.start} to {path.end} of length {path.length} is not a geodesic")


def gromov_product(graph: GraphHandle, x: Vertex, y: Vertex, p: Vertex, horizon: int = HORIZON) -> Fraction:
    """(x|y)_p = (d(x,p) + d(y,p) - d(x,y)) / 2, exact."""
    return Fraction(
        distance(graph, x, p, horizon) + distance(graph, y, p, horizon) - distance(graph, x, y, horizon),
        2,
    )


def ball(graph: GraphHandle, center: Vertex, radius: int) -> List[Vertex]:
    return sorted(_bfs(graph, center, radius))


def ball_layers(graph: GraphHandle, center: Vertex, radius: int) -> Dict[Vertex, int]:
    return dict(_bfs(graph, center, radius))


def geodesic_interval(graph: GraphHandle, u: Vertex, w: Vertex, horizon: int = HORIZON) -> GeodesicInterval:
    length = distance(graph, u, w, horizon)
    to_target = _distance_to(graph, w, horizon)

    layers = [(u,)]
    edges = []
    for remaining in range(length, 0, -1):
        next_layer: Set[Vertex] = set()
        for x in layers[-1]:
            for y in graph.neighbors(x):
                # NOTE: one step closer to the target keeps y on a geodesic from u
                if to_target(y) == remaining - 1:
                    next_layer.add(y)
                    edges.append(tuple(sorted((x, y))))
        layers.append(tuple(sorted(next_layer)))

    return GeodesicInterval(source=u, target=w, layers=tuple(layers), edges=tuple(sorted(set(edges))))


def distance_to_set(graph: GraphHandle, x: Vertex, targets: Sequence[Vertex], horizon: int = HORIZON) -> int:
    best = None
    for y in targets:
        try:
            d = distance(graph, x, y, horizon)
        except Unreachable:
            continue
        best = d if best is None else min(best, d)

    if best is None:
        raise Unreachable(horizon, f"{x} is not within {horizon} of any target")
    return best


def hausdorff_distance(
    graph: GraphHandle, a: Sequence[Vertex], b: Sequence[Vertex], horizon: int = HORIZON
) -> int:
    assert len(a) > 0 and len(b) > 0, "both vertex sets must be nonempty"
    forward = max(distance_to_set(graph, x, b, horizon) for x in a)
    backward = max(distance_to_set(graph, y, a, horizon) for y in b)
    return max(forward, backward)
