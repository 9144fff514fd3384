from abc import ABC, abstractmethod
from typing import Dict, Iterable

from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.metric import ball
from direction_space.isometry.exception import InvalidIsometry


class Isometry(ABC):
    """A graph automorphism g with a computable inverse."""

    def __init__(self, label: str):
        self.label = label

    @abstractmethod
    def forward(self, vertex: Vertex) -> Vertex:
        raise NotImplementedError

    @abstractmethod
    def backward(self, vertex: Vertex) -> Vertex:
        raise NotImplementedError

    def __call__(self, vertex: Vertex) -> Vertex:
        return self.forward(vertex)

    def compose(self, other: "Isometry") -> "Isometry":
        """Return self ∘ other, so `other` acts first."""
        return ComposedIsometry(self, other)

    def inverse(self) -> "Isometry":
        return InverseIsometry(self)

    def power(self, n: int) -> "Isometry":
        if n == 0:
            return IdentityIsometry()
        if n == 1:
            return self
        return PowerIsometry(self, n)

    def apply_power(self, vertex: Vertex, n: int) -> Vertex:
        step = self.forward if n >= 0 else self.backward
        for _ in range(abs(n)):
            vertex = step(vertex)
        return vertex

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"


class IdentityIsometry(Isometry):
    def __init__(self):
        super().__init__("identity")

    def forward(self, vertex: Vertex) -> Vertex:
        return vertex

    def backward(self, vertex: Vertex) -> Vertex:
        return vertex

    def compose(self, other: Isometry) -> Isometry:
        return other

    def inverse(self) -> Isometry:
        return self

    def power(self, n: int) -> Isometry:
        return self


class ComposedIsometry(Isometry):
    def __init__(self, outer: Isometry, inner: Isometry):
        super().__init__(f"{outer.label}*{inner.label}")
        self.outer = outer
        self.inner = inner

    def forward(self, vertex: Vertex) -> Vertex:
        return self.outer.forward(self.inner.forward(vertex))

    def backward(self, vertex: Vertex) -> Vertex:
        return self.inner.backward(self.outer.backward(vertex))


class InverseIsometry(Isometry):
    def __init__(self, base: Isometry):
        super().__init__(f"{base.label}^-1")
        self.base = base

    def forward(self, vertex: Vertex) -> Vertex:
        return self.base.backward(vertex)

    def backward(self, vertex: Vertex) -> Vertex:
        return self.base.forward(vertex)

    def inverse(self) -> Isometry:
        return self.base


class PowerIsometry(Isometry):
    def __init__(self, base: Isometry, n: int):
        super().__init__(f"{base.label}^{n}")
        self.base = base
        self.n = n

    def forward(self, vertex: Vertex) -> Vertex:
        return self.base.apply_power(vertex, self.n)

    def backward(self, vertex: Vertex) -> Vertex:
        return self.base.apply_power(vertex, -self.n)

    def power(self, n: int) -> Isometry:
        return self.base.power(self.n * n)


class PermutationIsometry(Isometry):
    """An explicit vertex permutation of a finite graph."""

    def __init__(self, mapping: Dict[Vertex, Vertex], label: str = "permutation"):
        super().__init__(label)
        self.mapping = dict(mapping)
        self._inverse = {image: vertex for vertex, image in self.mapping.items()}

        assert len(self._inverse) == len(self.mapping), "a permutation must be injective"
        assert set(self._inverse) == set(self.mapping), "a permutation must map the vertex set onto itself"

    def forward(self, vertex: Vertex) -> Vertex:
        return self.mapping[vertex]

    def backward(self, vertex: Vertex) -> Vertex:
        return self._inverse[vertex]

    def compose(self, other: Isometry) -> Isometry:
        if isinstance(other, PermutationIsometry):
            mapping = {v: self.mapping[other.mapping[v]] for v in other.mapping}
            return PermutationIsometry(mapping, label=f"{self.label}*{other.label}")
        return super().compose(other)

    def inverse(self) -> Isometry:
        return PermutationIsometry(self._inverse, label=f"{self.label}^-1")


def validate_isometry(graph: GraphHandle, isometry: Isometry, radius: int, vertices: Iterable[Vertex] = None):
    """Spot-check bijectivity and adjacency preservation on a ball.

    Raises:
        InvalidIsometry: an inverse fails or an edge is not mapped to an edge
    """
    scanned = ball(graph, graph.basepoint, radius) if vertices is None else list(vertices)

    for v in scanned:
        try:
            image = isometry.forward(v)
            back = isometry.backward(image)
        except (KeyError, ValueError) as e:
            raise InvalidIsometry(f"{isometry.label} is undefined at {v}: {e}")

        if back != v:
            raise InvalidIsometry(f"{isometry.label} has no inverse at {v}")
        if not graph.has_vertex(image):
            raise InvalidIsometry(f"{isometry.label} maps {v} outside the graph")

        neighbors = set(graph.neighbors(image))
        for u in graph.neighbors(v):
            if isometry.forward(u) not in neighbors:
                raise InvalidIsometry(f"{isometry.label} breaks the edge ({v}, {u})")
