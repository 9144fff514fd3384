import json
from dataclasses import dataclass
from enum import Enum, auto
from typing import Any, Dict, Iterable, Tuple, Union

from direction_space.cos.exception import IncompatibleInstances
from direction_space.graph.graph import Vertex


class TidyBelow(Enum):
    TIDY = auto()
    NOT_TIDY = auto()
    NOT_DECIDABLE = auto()


@dataclass(frozen=True)
class StabilizerTuple:
    """The pointwise stabiliser G_A of a finite vertex tuple."""

    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        assert len(self.vertices) > 0, "a stabiliser tuple must be nonempty"
        assert len(set(self.vertices)) == len(self.vertices), f"duplicate vertices in {self.vertices}"
        assert list(self.vertices) == sorted(self.vertices), "use StabilizerTuple.of to sort the vertices"

    @classmethod
    def of(cls, vertices: Iterable[Vertex]) -> "StabilizerTuple":
        return cls(tuple(sorted(set(vertices))))

    def to_dict(self) -> Dict[str, Any]:
        return {"stabilizer": list(self.vertices)}


@dataclass(frozen=True)
class Algebraic:
    """A closed-form subgroup, e.g. U_a × U_b of the two-direction example group."""

    family: str
    params: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"algebraic": {"family": self.family, "params": list(self.params)}}


COSHandle = Union[StabilizerTuple, Algebraic]


def parse_handle(text: str) -> COSHandle:
    """Read a handle literal.

    Accepts the JSON forms `{"stabilizer": [...]}` and
    `{"algebraic": {"family": "U", "params": [a, b]}}`, and the shorthands
    `stab:v1,v2` and `U:a,b`.
    """
    text = text.strip()

    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise IncompatibleInstances(f"malformed handle literal: {e}")
        if "stabilizer" in data:
            return StabilizerTuple.of(str(v) for v in data["stabilizer"])
        if "algebraic" in data:
            params = data["algebraic"].get("params", [])
            if isinstance(params, dict):
                params = list(params.values())
            return Algebraic(family=data["algebraic"]["family"], params=tuple(int(p) for p in params))
        raise IncompatibleInstances(f"unknown handle literal {text}")

    family, _, body = text.partition(":")
    if family == "stab":
        return StabilizerTuple.of(body.split(","))
    try:
        return Algebraic(family=family, params=tuple(int(p) for p in body.split(",")))
    except ValueError:
        raise IncompatibleInstances(f"unknown handle literal {text}")
