import math
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.hyperbolicity import estimate_hyperbolicity
from direction_space.graph.metric import ball, distance, geodesic_interval
from direction_space.isometry.axis import AxisWindow, certify_translation, window_from_path
from direction_space.isometry.classify import require_hyperbolic
from direction_space.isometry.exception import AxisNotFoundWithinHorizon, ColoringDegenerate, HorizonTooSmall
from direction_space.isometry.inverse_limit import InverseSystem, solve_inverse_limit
from direction_space.isometry.isometry import Isometry
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)

Edge = Tuple[Vertex, Vertex]
Path = Tuple[Vertex, ...]

# the ball radius is scanned up to this multiple of the measured four-point constant
_BALL_RADIUS_FACTOR = 120
# the near-axis span widens up to this multiple of ⌈R/displacement⌉
_SPAN_WIDENING = 2


@dataclass(frozen=True)
class NearAxis:
    """Union of all geodesic intervals between h^{-m}(u) and h^{m}(u), u in the local Min set."""

    vertices: FrozenSet[Vertex]
    edges: FrozenSet[Edge]
    endpoints: Tuple[Tuple[Vertex, Vertex], ...]

    def adjacency(self) -> Dict[Vertex, List[Vertex]]:
        adjacency: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        return {v: sorted(neighbors) for v, neighbors in adjacency.items()}


@dataclass(frozen=True)
class ShortLexAxis:
    window: AxisWindow
    ball_radius: int
    separation_power: int
    colour_power: int
    num_colours: int
    level_sizes: Tuple[int, ...]
    size_bound: int
    orbit_counts: Tuple[int, ...]
    stabilised: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            **self.window.to_dict(),
            "ball_radius": self.ball_radius,
            "separation_power": self.separation_power,
            "colour_power": self.colour_power,
            "num_colours": self.num_colours,
            "level_sizes": list(self.level_sizes),
            "size_bound": self.size_bound,
            "orbit_counts": list(self.orbit_counts),
            "stabilised": self.stabilised,
        }


def _edge(a: Vertex, b: Vertex) -> Edge:
    return (a, b) if a < b else (b, a)


def near_axis(
    graph: GraphHandle, h: Isometry, vertex: Vertex, displacement: int, span: int, reach: int
) -> NearAxis:
    minset = [u for u in ball(graph, vertex, displacement) if distance(graph, u, h.forward(u), reach) == displacement]

    vertices: Set[Vertex] = set()
    edges: Set[Edge] = set()
    endpoints = []
    for u in minset:
        source, target = h.apply_power(u, -span), h.apply_power(u, span)
        interval = geodesic_interval(graph, source, target, reach)
        vertices.update(interval.vertices)
        edges.update(interval.edges)
        endpoints.append((source, target))

    return NearAxis(vertices=frozenset(vertices), edges=frozenset(edges), endpoints=tuple(endpoints))


class _Distances:
    """Memoised d(·, target) lookups."""

    def __init__(self, graph: GraphHandle, reach: int):
        self.graph = graph
        self.reach = reach
        self._cache: Dict[Tuple[Vertex, Vertex], int] = {}

    def __call__(self, x: Vertex, target: Vertex) -> int:
        key = (x, target)
        if key not in self._cache:
            self._cache[key] = distance(self.graph, x, target, self.reach)
        return self._cache[key]


def _connects(
    neighbors: Callable[[Vertex], Iterable[Vertex]],
    dist: _Distances,
    source: Vertex,
    target: Vertex,
    blocked: FrozenSet[Vertex] = frozenset(),
) -> bool:
    """Whether some geodesic from `source` to `target` along `neighbors` avoids `blocked`."""
    if source in blocked or target in blocked:
        return False

    frontier = {source}
    while frontier:
        if target in frontier:
            return True
        frontier = {
            y
            for x in frontier
            for y in neighbors(x)
            if y not in blocked and dist(y, target) == dist(x, target) - 1
        }
    return False


def _orbit_of(h: Isometry, vertices: Iterable[Vertex], j: int) -> FrozenSet[Vertex]:
    return frozenset(h.apply_power(x, j) for x in vertices)


def _separation(
    graph: GraphHandle,
    h: Isometry,
    vertex: Vertex,
    near: NearAxis,
    limit: int,
    max_radius: int,
    profile: TruncationProfile,
    dist: _Distances,
) -> Optional[Tuple[int, int, int, Dict[int, FrozenSet[Vertex]]]]:
    """The least radius K, then the least power n, with the separation properties on the window.

    None when no radius up to `max_radius` works, usually because `limit` leaves
    room for fewer than two translates.

    (i) the ball meets every geodesic of the near-axis intervals,
    (ii) the translated balls are pairwise disjoint on the near-axis set,
    (iii) near-axis geodesics from B₀ to Bⱼ pass through every Bₖ in between.
    """
    a_adjacency = near.adjacency()
    in_axis = a_adjacency.__getitem__

    for radius in range(max_radius + 1):
        centre = frozenset(ball(graph, vertex, radius))
        if any(_connects(graph.neighbors, dist, s, t, centre) for s, t in near.endpoints):
            continue

        for n in range(1, profile.power_bound + 1):
            hn = h.power(n)
            depth = 0
            image = vertex
            while depth < profile.power_bound:
                image = hn.forward(image)
                if dist(vertex, image) + radius > limit:
                    break
                depth += 1

            if depth < 2:
                break

            balls = {j: _orbit_of(hn, centre, j) for j in range(-depth, depth + 1)}
            on_axis = {j: balls[j] & near.vertices for j in balls}

            disjoint = all(
                len(on_axis[i] & on_axis[j]) == 0 for i in balls for j in balls if i < j
            )
            if not disjoint:
                continue

            passes = all(
                not _connects(in_axis, dist, x, y, balls[k])
                for j in range(2, depth + 1)
                for x in sorted(on_axis[0])
                for y in sorted(on_axis[j])
                if _connects(in_axis, dist, x, y)
                for k in range(1, j)
            )
            if passes:
                return radius, n, depth, balls

    return None


def _edge_orbits(edges: FrozenSet[Edge], h: Isometry) -> List[Set[Edge]]:
    linked = nx.Graph()
    linked.add_nodes_from(edges)
    for a, b in edges:
        image = _edge(h.forward(a), h.forward(b))
        if image in edges:
            linked.add_edge((a, b), image)
    return list(nx.connected_components(linked))


def _colouring(
    h: Isometry,
    near: NearAxis,
    separation_power: int,
    colour_seed: int,
    profile: TruncationProfile,
    dist: _Distances,
) -> Tuple[int, Dict[Edge, int], int]:
    a_adjacency = near.adjacency()

    for m in range(1, profile.power_bound + 1):
        power = separation_power * m
        hc = h.power(power)

        orbits = _edge_orbits(near.edges, hc)
        representatives = sorted(min(orbit) for orbit in orbits)
        order = list(representatives)
        random.Random(colour_seed).shuffle(order)
        rank = {rep: i for i, rep in enumerate(order)}

        colour = {}
        for orbit in orbits:
            for e in orbit:
                colour[e] = rank[min(orbit)]

        proper = all(
            len({colour[_edge(x, y)] for y in neighbors}) == len(neighbors) for x, neighbors in a_adjacency.items()
        )
        # NOTE: representatives must move further than the diameter of an edge
        far = all(dist(x, hc.forward(x)) > 2 for e in representatives for x in e)

        if proper and far:
            return power, colour, len(representatives)

    raise ColoringDegenerate(f"no power up to {profile.power_bound} colours the near-axis set properly")


def _shortlex_path(
    x: Vertex,
    y: Vertex,
    a_adjacency: Dict[Vertex, List[Vertex]],
    colour: Dict[Edge, int],
    dist: _Distances,
) -> Optional[Path]:
    layers = [{x}]
    for _ in range(dist(x, y)):
        layers.append({z for w in layers[-1] for z in a_adjacency[w] if dist(z, y) == dist(w, y) - 1})
    if y not in layers[-1]:
        return None

    alive = {y}
    for layer in reversed(layers[:-1]):
        alive |= {w for w in layer if any(z in alive and dist(z, y) == dist(w, y) - 1 for z in a_adjacency[w])}

    path = [x]
    while path[-1] != y:
        w = path[-1]
        steps = [z for z in a_adjacency[w] if z in alive and dist(z, y) == dist(w, y) - 1]
        path.append(min(steps, key=lambda z: (colour[_edge(w, z)], z)))
    return tuple(path)


def _restrict(path: Path, lower: FrozenSet[Vertex], upper: FrozenSet[Vertex]) -> Path:
    """The shortest subpath from `lower` to `upper`, earliest start on ties."""
    best = None
    for s, a in enumerate(path):
        if a not in lower:
            continue
        for e in range(s + 1, len(path)):
            if path[e] in upper:
                if best is None or e - s < best[1] - best[0]:
                    best = (s, e)
                break

    if best is None:
        raise HorizonTooSmall(f"the path from {path[0]} to {path[-1]} does not cross the inner balls")
    return path[best[0] : best[1] + 1]


def _extend(isometry: Isometry, path: Path, profile: TruncationProfile) -> Path:
    """The path continued by R vertices at each end along its own translation."""
    certified = certify_translation(isometry, path, profile.power_bound)
    if certified is None:
        raise AxisNotFoundWithinHorizon(f"no power of {isometry.label} up to {profile.power_bound} translates the path")

    power, shift = certified
    hq = isometry.power(power)
    vertices = list(path)
    # g^q(v_i) = v_{i+shift}
    for _ in range(profile.horizon):
        vertices.append(hq.forward(vertices[-shift]))
        vertices.insert(0, hq.backward(vertices[shift - 1]))
    return tuple(vertices)


def _symmetric(path: Path, centre: int, profile: TruncationProfile) -> Path:
    if centre < profile.horizon or centre + profile.horizon >= len(path):
        raise HorizonTooSmall(f"the path around {path[centre]} is shorter than the window")
    return path[centre - profile.horizon : centre + profile.horizon + 1]


def shortlex_axis(
    graph: GraphHandle, isometry: Isometry, profile: TruncationProfile, colour_seed: int = 0
) -> ShortLexAxis:
    """An axis assembled from short-lex-minimal paths in the near-axis set.

    Raises:
        NotHyperbolic: `isometry` is not hyperbolic
        HorizonTooSmall: the separating ball or power cannot be certified on the window
        ColoringDegenerate: no power yields a proper colouring
        AxisNotFoundWithinHorizon: the selected path is not a translated geodesic
    """
    witness = require_hyperbolic(graph, isometry, profile)
    h = isometry.power(witness.power)
    vertex = witness.vertex
    base_span = -(-profile.horizon // witness.displacement)

    for span in range(base_span, _SPAN_WIDENING * base_span + 1):
        reach = 2 * (span + 1) * witness.displacement + 2 * profile.horizon
        dist = _Distances(graph, reach)
        near = near_axis(graph, h, vertex, witness.displacement, span, reach)
        delta = estimate_hyperbolicity(graph, sorted(near.vertices), horizon=reach, seed=profile.seed).delta_fourpoint
        max_radius = math.ceil(_BALL_RADIUS_FACTOR * delta)

        separation = _separation(graph, h, vertex, near, span * witness.displacement, max_radius, profile, dist)
        if separation is not None:
            break
    else:
        raise HorizonTooSmall(
            f"no ball radius up to {max_radius} separates the near-axis set for spans up to {span}"
        )

    radius, n, depth, balls = separation
    logger.debug(f"near-axis span {span}, separating ball of radius {radius} at {vertex}, power {n}, depth {depth}")

    colour_power, colour, num_colours = _colouring(h, near, n, colour_seed, profile, dist)
    a_adjacency = near.adjacency()

    def key(path: Path):
        return (len(path), tuple(colour[_edge(a, b)] for a, b in zip(path, path[1:])))

    levels: List[List[Path]] = []
    for i in range(1, depth + 1):
        paths = set()
        for x in sorted(balls[-i] & near.vertices):
            for y in sorted(balls[i] & near.vertices):
                path = _shortlex_path(x, y, a_adjacency, colour, dist)
                if path is not None:
                    paths.add(path)
        if len(paths) == 0:
            raise HorizonTooSmall(f"no near-axis geodesic joins the balls at level {i}")
        levels.append(sorted(paths, key=key))

    maps = [
        {path: _restrict(path, balls[-i], balls[i]) for path in levels[i]} for i in range(1, depth)
    ]
    solution = solve_inverse_limit(InverseSystem(levels=levels, maps=maps))

    selected = _extend(isometry, solution.thread[-1], profile)
    centre = min(range(len(selected)), key=lambda i: (dist(selected[i], vertex), i))
    trimmed = _symmetric(selected, centre, profile)
    window = window_from_path(graph, isometry, trimmed, profile)

    orbit_counts = tuple(
        len(_edge_orbits(near_axis(graph, h, vertex, witness.displacement, m, reach).edges, h.power(n)))
        for m in range(max(1, span // 2), span + 1)
    )

    return ShortLexAxis(
        window=window,
        ball_radius=radius,
        separation_power=n,
        colour_power=colour_power,
        num_colours=num_colours,
        level_sizes=tuple(len(level) for level in levels),
        size_bound=solution.size_bound,
        orbit_counts=orbit_counts,
        stabilised=len(orbit_counts) >= 2 and orbit_counts[-1] == orbit_counts[-2],
    )
