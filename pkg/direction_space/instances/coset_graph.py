from typing import Any, Dict, FrozenSet, List, Sequence, Tuple

from direction_space.graph.graph import FiniteGraph, Vertex
from direction_space.instances.base import PermutationGroupInstance
from direction_space.instances.exception import InvariantViolation, NotSymmetricGenerators, ParseError
from direction_space.isometry.isometry import Isometry, PermutationIsometry
from direction_space.logger import Logger

logger = Logger(__name__)

# NOTE: a permutation is its image tuple, (p*q)(i) = p[q[i]]
Permutation = Tuple[int, ...]


def multiply(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[i] for i in q)


def invert(p: Permutation) -> Permutation:
    inverse = [0] * len(p)
    for i, image in enumerate(p):
        inverse[image] = i
    return tuple(inverse)


def closure(generators: Sequence[Permutation], degree: int) -> List[Permutation]:
    """The group generated by `generators`, sorted."""
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        discovered = []
        for g in frontier:
            for s in generators:
                h = multiply(g, s)
                if h not in elements:
                    elements.add(h)
                    discovered.append(h)
        frontier = discovered
    return sorted(elements)


def _check_permutation(p: Sequence[int], degree: int) -> Permutation:
    if sorted(p) != list(range(degree)):
        raise InvariantViolation(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return tuple(p)


class CosetGraphInstance(PermutationGroupInstance):
    """The coset graph G/U with edges (gU, gsU), and G acting by left multiplication."""

    kind = "coset"

    def __init__(
        self,
        group: Sequence[Sequence[int]],
        subgroup: Sequence[Sequence[int]],
        generators: Sequence[Sequence[int]],
    ):
        assert len(group) > 0, "the group needs at least one generator"
        degree = len(group[0])

        group_generators = [_check_permutation(p, degree) for p in group]
        subgroup_generators = [_check_permutation(p, degree) for p in subgroup]
        self.generators = sorted({_check_permutation(p, degree) for p in generators})

        if any(invert(s) not in self.generators for s in self.generators):
            raise NotSymmetricGenerators(f"the generating set {self.generators} is not closed under inverses")

        self.degree = degree
        self.group = closure(group_generators, degree)
        self.subgroup = closure(subgroup_generators, degree)

        members = set(self.group)
        if not set(self.subgroup) <= members:
            raise InvariantViolation("the subgroup is not contained in the group")
        if not set(self.generators) <= members:
            raise InvariantViolation("the generators are not elements of the group")

        self.cosets: List[FrozenSet[Permutation]] = []
        self._code: Dict[Permutation, Vertex] = {}
        for g in self.group:
            if g in self._code:
                continue
            coset = frozenset(multiply(g, u) for u in self.subgroup)
            code = Vertex(f"c{len(self.cosets)}")
            self.cosets.append(coset)
            for h in coset:
                self._code[h] = code

        edges = set()
        for coset in self.cosets:
            for g in coset:
                for s in self.generators:
                    a, b = self._code[g], self._code[multiply(g, s)]
                    if a != b:
                        edges.add(tuple(sorted((a, b))))

        graph = FiniteGraph.from_edges([f"c{i}" for i in range(len(self.cosets))], sorted(edges))
        self.disconnected = not graph.is_connected
        if self.disconnected:
            logger.warning("the coset graph is disconnected, S and U do not generate G")

        super().__init__(graph, [self.element(g) for g in self.group])

    def describe(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "order": len(self.group),
            "cosets": len(self.cosets),
            "disconnected": self.disconnected,
        }

    def coset_of(self, g: Permutation) -> Vertex:
        return self._code[g]

    def representative(self, vertex: Vertex) -> Permutation:
        return min(self.cosets[int(vertex[1:])])

    def element(self, g: Permutation) -> PermutationIsometry:
        mapping = {self._code[h]: self._code[multiply(g, h)] for h in self.group}
        return PermutationIsometry(mapping, label="g:" + ",".join(str(i) for i in g))

    def vertex_stabilizer(self, vertex: Vertex) -> List[Permutation]:
        """The elements of G fixing `vertex`, as permutations."""
        return [g for g in self.group if self._code[multiply(g, self.representative(vertex))] == vertex]

    def conjugate_subgroup(self, vertex: Vertex) -> List[Permutation]:
        g = self.representative(vertex)
        return sorted(multiply(multiply(g, u), invert(g)) for u in self.subgroup)

    def parse_atom(self, token: str) -> Isometry:
        if token == "identity":
            return self.identity()

        kind, _, body = token.partition(":")
        if kind != "g":
            raise ParseError(1, f"unknown coset element {token!r}")
        try:
            g = _check_permutation([int(i) for i in body.split(",")], self.degree)
        except (ValueError, InvariantViolation) as e:
            raise ParseError(1, f"bad coset element {token!r}: {e}")
        if g not in self._code:
            raise ParseError(1, f"{token!r} is not an element of the group")
        return self.element(g)
