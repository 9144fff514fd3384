import math
from dataclasses import dataclass
from typing import Any, Dict

from direction_space.constants import DISPLAY_DIGITS
from direction_space.cos.handle import COSHandle
from direction_space.instances.base import Instance


def display_log(value: int) -> float:
    return float(f"{math.log(value):.{DISPLAY_DIGITS}g}")


@dataclass(frozen=True)
class CosDistance:
    """d(U, V) = log([U : U ∩ V]·[V : U ∩ V]), carried as the two exact indices."""

    forward: int
    backward: int

    @property
    def product(self) -> int:
        return self.forward * self.backward

    @property
    def value(self) -> float:
        return display_log(self.product)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "forward": str(self.forward),
            "backward": str(self.backward),
            "product": str(self.product),
            "distance": self.value,
        }


@dataclass(frozen=True)
class Displacement:
    """([αU : αU ∩ U], [U : αU ∩ U]) and their product."""

    moved: int
    kept: int

    @property
    def product(self) -> int:
        return self.moved * self.kept

    @property
    def value(self) -> float:
        return display_log(self.product)

    def to_dict(self) -> Dict[str, Any]:
        return {"moved": str(self.moved), "kept": str(self.kept), "product": str(self.product), "log": self.value}


def index(instance: Instance, first: COSHandle, second: COSHandle) -> int:
    """[U : U ∩ V].

    Raises:
        IncompatibleInstances: a handle does not belong to `instance`
        OracleHorizonExceeded: the orbit count is too large to scan
    """
    value = instance.index(first, second)
    assert value >= 1, f"an index is a positive integer, got {value}"
    return value


def cos_distance(instance: Instance, first: COSHandle, second: COSHandle) -> CosDistance:
    return CosDistance(forward=index(instance, first, second), backward=index(instance, second, first))


def displacement(instance: Instance, element: Any, handle: COSHandle) -> Displacement:
    image = instance.act(element, handle)
    return Displacement(moved=index(instance, image, handle), kept=index(instance, handle, image))
