import random
from typing import List, Tuple

import networkx as nx

from direction_space.graph.graph import FiniteGraph, GraphHandle, Vertex
from direction_space.graph.metric import ball

# attempts at drawing a connected G(n, p) before giving up
MAX_GRAPH_DRAWS = 1000


def _relabel(graph: nx.Graph) -> FiniteGraph:
    # NOTE: zero-padded codes keep the string order equal to the integer order
    width = len(str(graph.number_of_nodes() - 1))
    return FiniteGraph(nx.relabel_nodes(graph, {v: str(v).zfill(width) for v in graph.nodes}))


def cycle_graph(n: int) -> FiniteGraph:
    assert n >= 3, f"a cycle needs at least 3 vertices, got {n}"
    return _relabel(nx.cycle_graph(n))


def path_graph(n: int) -> FiniteGraph:
    return _relabel(nx.path_graph(n))


def random_connected_graph(n: int, p: float = 0.3, seed: int = 0) -> FiniteGraph:
    for attempt in range(MAX_GRAPH_DRAWS):
        graph = nx.gnp_random_graph(n, p, seed=seed * MAX_GRAPH_DRAWS + attempt)
        if nx.is_connected(graph):
            return _relabel(graph)
    raise ValueError(f"no connected G({n}, {p}) in {MAX_GRAPH_DRAWS} draws from seed {seed}")


def random_connected_graphs(count: int, n: int, p: float = 0.3) -> List[FiniteGraph]:
    return [random_connected_graph(n, p, seed=seed) for seed in range(count)]


def sample_triples(graph: GraphHandle, radius: int, count: int, seed: int = 0) -> List[Tuple[Vertex, Vertex, Vertex]]:
    """`count` triples drawn with replacement from the ball around the basepoint."""
    vertices = ball(graph, graph.basepoint, radius)
    rng = random.Random(seed)
    return [tuple(rng.choice(vertices) for _ in range(3)) for _ in range(count)]
