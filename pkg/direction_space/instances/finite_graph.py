from typing import Any, Dict, List

from networkx.algorithms.isomorphism import GraphMatcher

from direction_space.graph.graph import FiniteGraph
from direction_space.instances.base import PermutationGroupInstance
from direction_space.instances.exception import ParseError
from direction_space.isometry.isometry import Isometry, PermutationIsometry


def automorphisms(graph: FiniteGraph) -> List[PermutationIsometry]:
    matcher = GraphMatcher(graph.nx_graph, graph.nx_graph)
    mappings = sorted(tuple(sorted(m.items())) for m in matcher.isomorphisms_iter())
    return [PermutationIsometry(dict(m), label=f"auto:{i}") for i, m in enumerate(mappings)]


class FiniteGraphInstance(PermutationGroupInstance):
    """A finite graph with its full automorphism group."""

    kind = "file"

    def __init__(self, graph: FiniteGraph, source: str = ""):
        super().__init__(graph, automorphisms(graph))
        self.source = source

    def describe(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "path": self.source,
            "vertices": len(self.graph),
            "automorphisms": len(self.elements),
        }

    def parse_atom(self, token: str) -> Isometry:
        if token == "identity":
            return self.identity()

        kind, _, body = token.partition(":")
        if kind == "auto":
            try:
                return self.elements[int(body)]
            except (ValueError, IndexError):
                raise ParseError(1, f"{token!r} names no automorphism, there are {len(self.elements)}")
        if kind == "map":
            # NOTE: unlisted vertices are fixed
            mapping = {v: v for v in self.graph.vertices()}
            try:
                mapping.update(entry.split("=", 1) for entry in body.split(","))
            except ValueError:
                raise ParseError(1, f"bad permutation {token!r}, expected map:a=b,b=a")
            return self.load_permutation(mapping, label=token)

        raise ParseError(1, f"unknown finite graph element {token!r}")
