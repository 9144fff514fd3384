import itertools
import re
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from direction_space.constants import EXAMPLE_WINDOW
from direction_space.cos.exception import IncompatibleInstances
from direction_space.cos.handle import Algebraic, COSHandle, TidyBelow
from direction_space.instances.base import Instance
from direction_space.instances.exception import OrderTooSmall, ParseError
from direction_space.profile import TruncationProfile

# sorted (index, value) pairs with nonzero values
Support = Tuple[Tuple[int, int], ...]

_SHIFT = re.compile(r"^a(\^(?P<exponent>-?\d+))?$")

SUBGROUP_FAMILY = "U"


def _normalise(entries: Iterable[Tuple[int, int]], order: int) -> Support:
    total: Dict[int, int] = {}
    for i, v in entries:
        total[i] = (total.get(i, 0) + v) % order
    return tuple(sorted((i, v) for i, v in total.items() if v != 0))


def _format(support: Support) -> str:
    return ",".join(f"{i}={v}" for i, v in support)


@dataclass(frozen=True)
class ExampleElement:
    """(g, αⁿ) in (G₀ × G₁) ⋊ ⟨α⟩ with finitely supported g over Z/order."""

    first: Support
    second: Support
    shift: int
    order: int

    def shifted(self, n: int) -> Tuple[Support, Support]:
        """αⁿ(g): G₀ indices move by -n, G₁ indices by +n."""
        return (
            tuple((i - n, v) for i, v in self.first),
            tuple((i + n, v) for i, v in self.second),
        )

    def compose(self, other: "ExampleElement") -> "ExampleElement":
        """(g, αⁿ)(g', αᵐ) = (g + αⁿ(g'), αⁿ⁺ᵐ)."""
        assert self.order == other.order, "elements of different example groups cannot be multiplied"
        first, second = other.shifted(self.shift)
        return ExampleElement(
            first=_normalise(self.first + first, self.order),
            second=_normalise(self.second + second, self.order),
            shift=self.shift + other.shift,
            order=self.order,
        )

    def inverse(self) -> "ExampleElement":
        """(g, αⁿ)⁻¹ = (-α⁻ⁿ(g), α⁻ⁿ)."""
        first, second = self.shifted(-self.shift)
        return ExampleElement(
            first=_normalise(((i, -v) for i, v in first), self.order),
            second=_normalise(((i, -v) for i, v in second), self.order),
            shift=-self.shift,
            order=self.order,
        )

    def power(self, n: int) -> "ExampleElement":
        if n < 0:
            return self.inverse().power(-n)

        result = ExampleElement((), (), 0, self.order)
        for _ in range(n):
            result = result.compose(self)
        return result

    @property
    def label(self) -> str:
        if len(self.first) == 0 and len(self.second) == 0:
            return "identity" if self.shift == 0 else f"a^{self.shift}"
        return f"f:{_format(self.first)}|{_format(self.second)};a^{self.shift}"


def _handle(a: int, b: int) -> Algebraic:
    return Algebraic(family=SUBGROUP_FAMILY, params=(a, b))


class ExampleGroupInstance(Instance):
    """Two copies of the eventually-trivial sequences over Z/order, shifted in opposite directions by α.

    U(a, b) = U_a × U_b, where U_N holds the sequences vanishing at every index >= N.
    """

    kind = "example"

    def __init__(self, order: int):
        if order < 2:
            raise OrderTooSmall(f"F needs at least two elements, got order {order}")
        self.order = order

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "order": self.order}

    def identity(self) -> ExampleElement:
        return ExampleElement((), (), 0, self.order)

    def element(self, first: Dict[int, int], second: Dict[int, int], shift: int) -> ExampleElement:
        return ExampleElement(
            first=_normalise(first.items(), self.order),
            second=_normalise(second.items(), self.order),
            shift=shift,
            order=self.order,
        )

    def parse_atom(self, token: str) -> ExampleElement:
        if token == "identity":
            return self.identity()

        match = _SHIFT.match(token)
        if match is not None:
            exponent = match.group("exponent")
            return self.element({}, {}, 1 if exponent is None else int(exponent))

        if not token.startswith("f:"):
            raise ParseError(1, f"unknown example group element {token!r}")

        body, _, tail = token[2:].partition(";")
        shift = 0
        if tail != "":
            match = _SHIFT.match(tail)
            if match is None:
                raise ParseError(1, f"bad shift {tail!r} in {token!r}, expected a^n")
            shift = 1 if match.group("exponent") is None else int(match.group("exponent"))

        first, _, second = body.partition("|")
        try:
            parts = [
                {int(i): int(v) for i, v in (entry.split("=") for entry in part.split(",") if entry != "")}
                for part in (first, second)
            ]
        except ValueError as e:
            raise ParseError(1, f"bad support in {token!r}: {e}")
        return self.element(parts[0], parts[1], shift)

    # ==================================================
    #               Subgroups
    # ==================================================

    def validate_handle(self, handle: COSHandle):
        if not isinstance(handle, Algebraic) or handle.family != SUBGROUP_FAMILY or len(handle.params) != 2:
            raise IncompatibleInstances(f"the example group only supports U(a, b) handles, got {handle}")

    def index(self, first: COSHandle, second: COSHandle) -> int:
        """[U_a × U_b : (U_a × U_b) ∩ (U_c × U_d)] = |F|^(max(0, a-c) + max(0, b-d))."""
        self.validate_handle(first)
        self.validate_handle(second)
        (a, b), (c, d) = first.params, second.params
        return self.order ** (max(0, a - c) + max(0, b - d))

    def act(self, element: ExampleElement, handle: COSHandle) -> COSHandle:
        # NOTE: G is abelian, conjugation only sees the shift
        self.validate_handle(handle)
        a, b = handle.params
        return _handle(a - element.shift, b + element.shift)

    def default_base(self, element: ExampleElement, profile: TruncationProfile) -> COSHandle:
        return _handle(0, 0)

    def closed_form_scale(self, element: ExampleElement) -> Optional[int]:
        return self.order ** abs(element.shift)

    def tidy_above(self, element: ExampleElement, handle: COSHandle, depth: int) -> bool:
        # U_a × U_b splits along the two coordinates, one shrinking and one growing under α
        self.validate_handle(handle)
        return True

    def tidy_below(self, element: ExampleElement, handle: COSHandle) -> TidyBelow:
        self.validate_handle(handle)
        return TidyBelow.TIDY

    def is_subgroup(self, first: COSHandle, second: COSHandle) -> Optional[bool]:
        self.validate_handle(first)
        self.validate_handle(second)
        (a, b), (c, d) = first.params, second.params
        return a <= c and b <= d

    def brute_force_index(
        self, first: COSHandle, second: COSHandle, window: Tuple[int, int] = EXAMPLE_WINDOW
    ) -> int:
        """[U : U ∩ V] counted over sequences restricted to the coordinate window."""
        self.validate_handle(first)
        self.validate_handle(second)
        coordinates = list(range(window[0], window[1] + 1))

        total = 1
        for bound, other in zip(first.params, second.params):
            support = [i for i in coordinates if i < bound]
            members = 0
            inside = 0
            for values in itertools.product(range(self.order), repeat=len(support)):
                members += 1
                if all(v == 0 for i, v in zip(support, values) if i >= other):
                    inside += 1
            total *= members // inside
        return total
