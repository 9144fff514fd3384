import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple

from direction_space.cos.exception import DepthInfeasible, IncompatibleInstances
from direction_space.cos.handle import COSHandle, StabilizerTuple, TidyBelow
from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.instances.exception import InvariantViolation, ParseError
from direction_space.isometry.exception import InvalidIsometry
from direction_space.isometry.isometry import IdentityIsometry, Isometry, PermutationIsometry, validate_isometry
from direction_space.profile import TruncationProfile

_POWER = re.compile(r"^(?P<base>.+)\^(?P<exponent>-?\d+)$")
_INVERSE_SUFFIX = "-inverse"


class Instance(ABC):
    """A group acting on a space, with an exact index oracle on its compact open subgroups."""

    kind: str = "instance"

    @property
    def graph(self) -> Optional[GraphHandle]:
        return None

    @property
    def is_algebraic(self) -> bool:
        return self.graph is None

    @property
    def index_constant(self) -> Fraction:
        """C with [αⁿU : αⁿU ∩ V] <= C·s(α)ⁿ for the default base handles."""
        return Fraction(1)

    @abstractmethod
    def identity(self) -> Any:
        raise NotImplementedError

    @abstractmethod
    def parse_atom(self, token: str) -> Any:
        """Parse one element token without `*` or trailing powers."""
        raise NotImplementedError

    @abstractmethod
    def index(self, first: COSHandle, second: COSHandle) -> int:
        """[U : U ∩ V], exact."""
        raise NotImplementedError

    @abstractmethod
    def act(self, element: Any, handle: COSHandle) -> COSHandle:
        """The conjugate g U g⁻¹."""
        raise NotImplementedError

    @abstractmethod
    def default_base(self, element: Any, profile: TruncationProfile) -> COSHandle:
        raise NotImplementedError

    @abstractmethod
    def validate_handle(self, handle: COSHandle):
        raise NotImplementedError

    @abstractmethod
    def describe(self) -> Dict[str, Any]:
        raise NotImplementedError

    def compose(self, first: Any, second: Any) -> Any:
        return first.compose(second)

    def inverse(self, element: Any) -> Any:
        return element.inverse()

    def power(self, element: Any, n: int) -> Any:
        return element.power(n)

    def label(self, element: Any) -> str:
        return element.label

    def closed_form_scale(self, element: Any) -> Optional[int]:
        return None

    def tidy_above(self, element: Any, handle: COSHandle, depth: int) -> bool:
        raise DepthInfeasible(f"{self.kind} has no finite quotient for tidy-above checks")

    def tidy_below(self, element: Any, handle: COSHandle) -> TidyBelow:
        return TidyBelow.NOT_DECIDABLE

    def is_subgroup(self, first: COSHandle, second: COSHandle) -> Optional[bool]:
        """Whether U <= V, None when inclusion is not decidable here."""
        return None

    def parse_element(self, text: str) -> Any:
        """Parse `a*b`, `a^k`, `a^-1` and `a-inverse` over the instance's atoms."""
        text = text.strip()
        if text == "":
            raise ParseError(1, "empty element")

        element = None
        for token in text.split("*"):
            factor = self._parse_factor(token.strip())
            element = factor if element is None else self.compose(element, factor)
        return element

    def _parse_factor(self, token: str) -> Any:
        if token.endswith(_INVERSE_SUFFIX):
            return self.inverse(self._parse_factor(token[: -len(_INVERSE_SUFFIX)]))

        try:
            return self.parse_atom(token)
        except ParseError:
            match = _POWER.match(token)
            if match is None:
                raise
            return self.power(self._parse_factor(match.group("base")), int(match.group("exponent")))


class GraphInstance(Instance):
    """An instance acting on a graph, with tuple stabilisers as its compact open subgroups."""

    def __init__(self, graph: GraphHandle):
        self._graph = graph

    @property
    def graph(self) -> GraphHandle:
        return self._graph

    def identity(self) -> Isometry:
        return IdentityIsometry()

    @abstractmethod
    def orbit_size(self, fixed: Tuple[Vertex, ...], moved: Tuple[Vertex, ...]) -> int:
        """|G_A · B|, the orbit of the tuple B under the pointwise stabiliser of A."""
        raise NotImplementedError

    def fixer_size(self, vertices: Iterable[Vertex]) -> int:
        raise DepthInfeasible(f"{self.kind} cannot count pointwise stabilisers")

    def validate_handle(self, handle: COSHandle):
        if not isinstance(handle, StabilizerTuple):
            raise IncompatibleInstances(f"{self.kind} only supports stabiliser tuples, got {handle}")
        for v in handle.vertices:
            if not self.graph.has_vertex(v):
                raise IncompatibleInstances(f"{v!r} is not a vertex of {self.kind}")

    def index(self, first: COSHandle, second: COSHandle) -> int:
        self.validate_handle(first)
        self.validate_handle(second)
        return self.orbit_size(first.vertices, second.vertices)

    def act(self, element: Isometry, handle: COSHandle) -> COSHandle:
        self.validate_handle(handle)
        return StabilizerTuple.of(element.forward(v) for v in handle.vertices)

    def default_base(self, element: Isometry, profile: TruncationProfile) -> COSHandle:
        return StabilizerTuple((self.graph.basepoint,))

    def translates(self, element: Isometry, vertices: Tuple[Vertex, ...], depth: int) -> Tuple[Set[Vertex], Set[Vertex]]:
        """∪_{0<=k<=depth} αᵏ(A) and ∪_{0<=k<=depth} α⁻ᵏ(A)."""
        ahead, behind = set(vertices), set(vertices)
        forward, backward = list(vertices), list(vertices)
        for _ in range(depth):
            forward = [element.forward(v) for v in forward]
            backward = [element.backward(v) for v in backward]
            ahead.update(forward)
            behind.update(backward)
        return ahead, behind

    def tidy_above(self, element: Isometry, handle: COSHandle, depth: int) -> bool:
        """U = U₊U₋ at resolution `depth`, counted as |U|·|U₊ ∩ U₋| = |U₊|·|U₋|."""
        self.validate_handle(handle)
        ahead, behind = self.translates(element, handle.vertices, depth)
        return self.fixer_size(handle.vertices) * self.fixer_size(ahead | behind) == self.fixer_size(
            ahead
        ) * self.fixer_size(behind)

    def load_permutation(self, mapping: Dict[str, str], label: str = "permutation") -> Isometry:
        raise InvariantViolation(f"{self.kind} does not accept explicit permutations")


class PermutationGroupInstance(GraphInstance):
    """A finite group given by its vertex permutations."""

    def __init__(self, graph: GraphHandle, elements: List[PermutationIsometry]):
        super().__init__(graph)
        self.elements = elements

    def stabilizer(self, vertices: Iterable[Vertex]) -> List[PermutationIsometry]:
        vertices = list(vertices)
        return [g for g in self.elements if all(g.forward(v) == v for v in vertices)]

    def orbit_size(self, fixed: Tuple[Vertex, ...], moved: Tuple[Vertex, ...]) -> int:
        return len({tuple(g.forward(v) for v in moved) for g in self.stabilizer(fixed)})

    def fixer_size(self, vertices: Iterable[Vertex]) -> int:
        return len(self.stabilizer(vertices))

    def load_permutation(self, mapping: Dict[str, str], label: str = "permutation") -> Isometry:
        vertices = set(self.graph.vertices())
        if set(mapping) != vertices or set(mapping.values()) != vertices:
            raise InvariantViolation(f"{label} must map the vertex set {sorted(vertices)} onto itself")

        isometry = PermutationIsometry(mapping, label=label)
        try:
            validate_isometry(self.graph, isometry, radius=0, vertices=self.graph.vertices())
        except InvalidIsometry as e:
            raise InvariantViolation(str(e))
        return isometry
