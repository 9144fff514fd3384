from typing import Any, Dict, Iterable, List, Optional, Tuple

from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.instances.base import GraphInstance
from direction_space.instances.exception import InvariantViolation, ParseError
from direction_space.isometry.isometry import Isometry


def _decode(vertex: str) -> Tuple[int, int]:
    position, _, rail = vertex.partition(":")
    return int(position), int(rail)


def _encode(position: int, rail: int) -> Vertex:
    return Vertex(f"{position}:{rail}")


class LadderGraph(GraphHandle):
    """Z × {0, 1}: two rails joined by a rung at every position."""

    @property
    def basepoint(self) -> Vertex:
        return _encode(0, 0)

    def has_vertex(self, vertex: str) -> bool:
        try:
            _, rail = _decode(vertex)
        except ValueError:
            return False
        return rail in (0, 1) and vertex == _encode(*_decode(vertex))

    def neighbors(self, vertex: Vertex) -> List[Vertex]:
        i, s = _decode(vertex)
        return sorted([_encode(i - 1, s), _encode(i + 1, s), _encode(i, 1 - s)])

    def closed_form_distance(self, u: Vertex, v: Vertex) -> Optional[int]:
        (i, s), (j, t) = _decode(u), _decode(v)
        return abs(i - j) + abs(s - t)


class LadderIsometry(Isometry):
    """(i, s) ↦ (εi + k, s ⊕ σ)."""

    def __init__(self, sign: int, offset: int, swap: int, label: Optional[str] = None):
        assert sign in (1, -1), f"sign must be 1 or -1, got {sign}"
        assert swap in (0, 1), f"swap must be 0 or 1, got {swap}"
        super().__init__(label or f"affine:{sign},{offset},{swap}")
        self.sign = sign
        self.offset = offset
        self.swap = swap

    def forward(self, vertex: Vertex) -> Vertex:
        i, s = _decode(vertex)
        return _encode(self.sign * i + self.offset, s ^ self.swap)

    def backward(self, vertex: Vertex) -> Vertex:
        i, s = _decode(vertex)
        return _encode(self.sign * (i - self.offset), s ^ self.swap)

    def compose(self, other: Isometry) -> Isometry:
        if isinstance(other, LadderIsometry):
            return LadderIsometry(
                self.sign * other.sign,
                self.sign * other.offset + self.offset,
                self.swap ^ other.swap,
                label=f"{self.label}*{other.label}",
            )
        return super().compose(other)

    def inverse(self) -> Isometry:
        return LadderIsometry(self.sign, -self.sign * self.offset, self.swap, label=f"{self.label}^-1")


class LadderInstance(GraphInstance):
    """The automorphism group of the ladder: shifts, flips and glides.

    The group is discrete, so every element is uniscalar.
    """

    kind = "ladder"

    def __init__(self):
        super().__init__(LadderGraph())

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind}

    def parse_atom(self, token: str) -> Isometry:
        if token == "identity":
            return self.identity()

        kind, _, body = token.partition(":")
        try:
            if kind == "shift":
                return LadderIsometry(1, int(body), 0, label=token)
            if kind == "glide":
                return LadderIsometry(1, int(body), 1, label=token)
            if kind == "reflect":
                return LadderIsometry(-1, int(body), 0, label=token)
            if token == "flip":
                return LadderIsometry(1, 0, 1, label=token)
            if kind == "affine":
                sign, offset, swap = (int(x) for x in body.split(","))
                if sign not in (1, -1) or swap not in (0, 1):
                    raise InvariantViolation(f"{token!r} needs a sign of ±1 and a swap of 0 or 1")
                return LadderIsometry(sign, offset, swap, label=token)
        except ValueError as e:
            raise ParseError(1, f"bad ladder element {token!r}: {e}")

        raise ParseError(1, f"unknown ladder element {token!r}")

    def stabilizer(self, vertices: Iterable[Vertex]) -> List[LadderIsometry]:
        """The identity, plus the reflection through the rung of A when A lies on one rung."""
        positions = {_decode(v)[0] for v in vertices}
        elements = [LadderIsometry(1, 0, 0, label="identity")]
        if len(positions) == 1:
            (position,) = positions
            elements.append(LadderIsometry(-1, 2 * position, 0))
        return elements

    def orbit_size(self, fixed: Tuple[Vertex, ...], moved: Tuple[Vertex, ...]) -> int:
        return len({tuple(g.forward(v) for v in moved) for g in self.stabilizer(fixed)})

    def fixer_size(self, vertices: Iterable[Vertex]) -> int:
        return len(self.stabilizer(vertices))
