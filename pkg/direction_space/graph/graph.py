from abc import ABC, abstractmethod
from typing import Iterable, List, NewType, Optional, Tuple

import networkx as nx

# NOTE: a vertex is its canonical code, equality and order are those of the string
Vertex = NewType("Vertex", str)


class GraphHandle(ABC):
    """A locally finite graph, enumerated lazily from a basepoint."""

    @abstractmethod
    def neighbors(self, vertex: Vertex) -> List[Vertex]:
        """Return the neighbours of `vertex` sorted by code."""
        raise NotImplementedError

    @property
    @abstractmethod
    def basepoint(self) -> Vertex:
        raise NotImplementedError

    @abstractmethod
    def has_vertex(self, vertex: str) -> bool:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    def vertices(self) -> List[Vertex]:
        raise NotImplementedError(f"{type(self).__name__} is infinite and has no vertex list")

    def closed_form_distance(self, u: Vertex, v: Vertex) -> Optional[int]:
        """Exact distance when the graph knows one, otherwise None."""
        return None

    def is_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self.neighbors(u)


class FiniteGraph(GraphHandle):
    """A finite graph backed by a `networkx.Graph` on string codes."""

    def __init__(self, graph: nx.Graph, basepoint: Optional[Vertex] = None):
        assert graph.number_of_nodes() > 0, "a graph needs at least one vertex"
        assert all(isinstance(v, str) for v in graph.nodes), "vertex codes must be strings"
        assert nx.number_of_selfloops(graph) == 0, "a graph must be diagonal-free"

        self._graph = graph
        self._adjacency = {v: sorted(graph.neighbors(v)) for v in graph.nodes}
        self._vertices = sorted(graph.nodes)
        self._basepoint = basepoint if basepoint is not None else self._vertices[0]

        assert self._basepoint in self._adjacency, f"basepoint {self._basepoint} is not a vertex"

    @classmethod
    def from_edges(
        cls, vertices: Iterable[str], edges: Iterable[Tuple[str, str]], basepoint: Optional[Vertex] = None
    ) -> "FiniteGraph":
        graph = nx.Graph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(edges)
        return cls(graph, basepoint=basepoint)

    @property
    def nx_graph(self) -> nx.Graph:
        return self._graph

    @property
    def basepoint(self) -> Vertex:
        return self._basepoint

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def is_connected(self) -> bool:
        return nx.is_connected(self._graph)

    def neighbors(self, vertex: Vertex) -> List[Vertex]:
        return self._adjacency[vertex]

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._adjacency

    def vertices(self) -> List[Vertex]:
        return self._vertices

    def edges(self) -> List[Tuple[Vertex, Vertex]]:
        return sorted(tuple(sorted(edge)) for edge in self._graph.edges)

    def __len__(self) -> int:
        return len(self._vertices)
