import math
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from direction_space.constants import DISPLAY_DIGITS, MAX_SAFE_INTEGER
from direction_space.cos.handle import COSHandle, StabilizerTuple, TidyBelow
from direction_space.cos.oracle import displacement, index
from direction_space.instances.base import GraphInstance, Instance
from direction_space.isometry.axis import find_axis
from direction_space.isometry.classify import IsometryKind, classify
from direction_space.isometry.exception import HorizonTooSmall
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)


class ScaleMethod(Enum):
    CLOSED_FORM = auto()
    LIMIT_FORMULA = auto()
    TIDY_SEARCH = auto()


def json_integer(value: int) -> Union[int, str]:
    return value if abs(value) < MAX_SAFE_INTEGER else str(value)


@dataclass(frozen=True)
class ScaleEstimate:
    value: Union[int, float]
    method: ScaleMethod
    window: int
    iterates: Tuple[float, ...] = ()
    family_relative: bool = False
    handle: Optional[COSHandle] = None

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, int)

    def to_dict(self) -> Dict[str, Any]:
        value = json_integer(self.value) if self.is_exact else float(f"{self.value:.{DISPLAY_DIGITS}g}")
        return {
            "value": value,
            "method": self.method.name,
            "window": self.window,
            "iterates": [float(f"{x:.{DISPLAY_DIGITS}g}") for x in self.iterates],
            "family_relative": self.family_relative,
            "handle": None if self.handle is None else self.handle.to_dict(),
        }


def scale_candidates(instance: GraphInstance, element: Any, profile: TruncationProfile) -> List[COSHandle]:
    """The declared family: the witness orbit when elliptic, axis segments when hyperbolic.

    Raises:
        HorizonTooSmall: the element is undetermined on the horizon ball
    """
    isometry_class = classify(instance.graph, element, profile)

    if isometry_class.kind is IsometryKind.ELLIPTIC:
        return [StabilizerTuple.of(isometry_class.witness.orbit)]

    if isometry_class.kind is IsometryKind.HYPERBOLIC:
        vertices = find_axis(instance.graph, element, profile).vertices
        centre = len(vertices) // 2
        return [StabilizerTuple.of(vertices[centre : centre + j + 1]) for j in range(len(vertices) - centre)]

    raise HorizonTooSmall(f"{element.label} is undetermined: {isometry_class.diagnostics}")


def tidy_search(instance: GraphInstance, element: Any, profile: TruncationProfile) -> ScaleEstimate:
    """The least one-step index [αU : αU ∩ U] over the declared family."""
    candidates = scale_candidates(instance, element, profile)
    indices = [index(instance, instance.act(element, U), U) for U in candidates]
    best = min(indices)

    if len(candidates) > 1 and indices.index(best) == len(indices) - 1:
        raise HorizonTooSmall(f"the one-step index of {element.label} is still falling at the widest candidate")

    logger.debug(f"tidy search for {element.label}: indices {indices}")
    return ScaleEstimate(
        value=best,
        method=ScaleMethod.TIDY_SEARCH,
        window=profile.horizon,
        family_relative=True,
        handle=candidates[indices.index(best)],
    )


def limit_base(instance: Instance, element: Any, profile: TruncationProfile) -> COSHandle:
    """An axis edge stabiliser for hyperbolic graph elements, the default base otherwise."""
    if isinstance(instance, GraphInstance):
        isometry_class = classify(instance.graph, element, profile)
        if isometry_class.kind is IsometryKind.HYPERBOLIC:
            vertices = find_axis(instance.graph, element, profile).vertices
            centre = len(vertices) // 2
            return StabilizerTuple.of(vertices[centre : centre + 2])
    return instance.default_base(element, profile)


def limit_formula(
    instance: Instance,
    element: Any,
    profile: TruncationProfile,
    base: Optional[COSHandle] = None,
    power: Optional[int] = None,
) -> ScaleEstimate:
    """[αⁿU : αⁿU ∩ U]^(1/n) for n = 1..N."""
    base = limit_base(instance, element, profile) if base is None else base
    power = profile.power_bound if power is None else power

    iterates = []
    image = base
    for n in range(1, power + 1):
        image = instance.act(element, image)
        iterates.append(math.exp(math.log(index(instance, image, base)) / n))

    return ScaleEstimate(
        value=iterates[-1],
        method=ScaleMethod.LIMIT_FORMULA,
        window=power,
        iterates=tuple(iterates[-3:]),
        handle=base,
    )


def scale_estimate(
    instance: Instance, element: Any, profile: TruncationProfile, method: Optional[ScaleMethod] = None
) -> ScaleEstimate:
    """s(α), from the closed form when the instance has one, else by tidy search.

    Args:
        method (Optional[ScaleMethod]): force LIMIT_FORMULA or TIDY_SEARCH

    Raises:
        HorizonTooSmall: tidy search could not settle within the horizon
    """
    if method is None:
        closed = instance.closed_form_scale(element)
        if closed is not None:
            return ScaleEstimate(value=closed, method=ScaleMethod.CLOSED_FORM, window=0)

    if method is ScaleMethod.LIMIT_FORMULA or not isinstance(instance, GraphInstance):
        return limit_formula(instance, element, profile)

    return tidy_search(instance, element, profile)


def exact_scale(instance: Instance, element: Any, profile: TruncationProfile) -> int:
    estimate = scale_estimate(instance, element, profile)
    if not estimate.is_exact:
        raise HorizonTooSmall(f"the scale of {instance.label(element)} is only known approximately")
    return estimate.value


def modular_ratio(instance: Instance, element: Any, profile: TruncationProfile) -> Fraction:
    """s(g)/s(g⁻¹), exact."""
    return Fraction(
        exact_scale(instance, element, profile), exact_scale(instance, instance.inverse(element), profile)
    )


def tidy_displacement_check(
    instance: Instance,
    element: Any,
    handle: COSHandle,
    candidates: Sequence[COSHandle],
    profile: Optional[TruncationProfile] = None,
) -> bool:
    """Whether U has the least displacement d(αU, U) over the candidates.

    When it does and a profile is given, the displacement must equal s(α)·s(α⁻¹).
    """
    target = displacement(instance, element, handle).product
    minimal = all(target <= displacement(instance, element, U).product for U in candidates)

    if minimal and profile is not None:
        forward = exact_scale(instance, element, profile)
        backward = exact_scale(instance, instance.inverse(element), profile)
        assert target == forward * backward, (
            f"a displacement-minimal subgroup moves by {target}, but s(α)·s(α⁻¹) = {forward * backward}"
        )

    return minimal


def tidy_above_check(instance: Instance, element: Any, handle: COSHandle, depth: int) -> bool:
    """
    Raises:
        DepthInfeasible: the finite quotient at `depth` is too large
    """
    assert depth >= 1, f"depth must be positive, got {depth}"
    return instance.tidy_above(element, handle, depth)


def tidy_below_check(instance: Instance, element: Any, handle: COSHandle) -> TidyBelow:
    return instance.tidy_below(element, handle)
