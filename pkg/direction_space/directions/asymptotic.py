import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from direction_space.constants import MAX_EXPONENT_PAIRS
from direction_space.cos.handle import COSHandle
from direction_space.cos.oracle import CosDistance, cos_distance
from direction_space.cos.scale import scale_estimate
from direction_space.directions.exception import Inconclusive
from direction_space.directions.ray import Ray, ray_base
from direction_space.instances.base import Instance
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)

Scale = Union[int, float]


@dataclass(frozen=True)
class AsymptoticVerdict:
    """Whether the speed-adjusted rays of α and β stay at bounded distance.

    `trace` holds the distance products of the deciding exponent pair for n = 1..N.
    """

    related: bool
    exponents: Optional[Tuple[int, int]] = None
    bound_witness: Optional[CosDistance] = None
    growth_witness: Optional[Dict[str, Any]] = None
    trace: Tuple[int, ...] = ()
    pairs_tried: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "related": self.related,
            "exponents": None if self.exponents is None else list(self.exponents),
            "bound_witness": None if self.bound_witness is None else self.bound_witness.to_dict(),
            "growth_witness": self.growth_witness,
            "trace": [str(x) for x in self.trace],
            "pairs_tried": self.pairs_tried,
        }


def _mismatch(first_scale: Scale, second_scale: Scale, first_exponent: int, second_exponent: int):
    if isinstance(first_scale, int) and isinstance(second_scale, int):
        a, b = first_scale**first_exponent, second_scale**second_exponent
        return Fraction(max(a, b), min(a, b))
    gap = abs(first_exponent * math.log(first_scale) - second_exponent * math.log(second_scale))
    return round(gap, 9)


def exponent_pairs(first_scale: Scale, second_scale: Scale, profile: TruncationProfile) -> List[Tuple[int, int]]:
    """(k_α, k_β) pairs, best matched speeds s(α)^k_α ≈ s(β)^k_β first, then smaller exponents."""
    if second_scale > 1:
        bound = math.ceil(math.log(first_scale) * profile.power_bound / math.log(second_scale))
        bound = min(profile.exponent_bound, max(1, bound))
    else:
        bound = profile.exponent_bound

    pairs = [(a, b) for a in range(1, bound + 1) for b in range(1, bound + 1)]
    return sorted(pairs, key=lambda pair: (_mismatch(first_scale, second_scale, *pair), sum(pair), pair))


def ray_distances(
    instance: Instance,
    first: Any,
    second: Any,
    first_base: COSHandle,
    second_base: COSHandle,
    exponents: Tuple[int, int],
    power_bound: int,
) -> List[CosDistance]:
    """d(α^(k_α n) U, β^(k_β n) V) for n = 1..N."""
    first_ray = Ray(instance, instance.power(first, exponents[0]), first_base)
    second_ray = Ray(instance, instance.power(second, exponents[1]), second_base)
    return [cos_distance(instance, first_ray[n], second_ray[n]) for n in range(1, power_bound + 1)]


def asymptotic(
    instance: Instance,
    first: Any,
    second: Any,
    profile: TruncationProfile,
    first_base: Optional[COSHandle] = None,
    second_base: Optional[COSHandle] = None,
) -> AsymptoticVerdict:
    """Decide α ≍ β on the truncation window.

    A pair is bounded when no distance in the upper half of the window exceeds
    the largest one before it. The elements are unrelated only when every
    evaluated pair grows monotonically over the upper half.

    Raises:
        Inconclusive: neither a bounded pair nor monotone growth on every pair
    """
    first_base = ray_base(instance, first, profile) if first_base is None else first_base
    second_base = ray_base(instance, second, profile) if second_base is None else second_base

    first_scale = scale_estimate(instance, first, profile).value
    second_scale = scale_estimate(instance, second, profile).value
    pairs = exponent_pairs(first_scale, second_scale, profile)[:MAX_EXPONENT_PAIRS]

    half = profile.upper_half.start
    growth = []
    undecided = False
    for tried, exponents in enumerate(pairs, start=1):
        distances = ray_distances(
            instance, first, second, first_base, second_base, exponents, profile.power_bound
        )
        products = [d.product for d in distances]

        # NOTE: products[n - 1] is the distance at n
        if max(products[half - 1 :]) <= max(products[: half - 1]):
            logger.debug(f"{instance.label(first)} ≍ {instance.label(second)} with exponents {exponents}")
            return AsymptoticVerdict(
                related=True,
                exponents=exponents,
                bound_witness=max(distances, key=lambda d: d.product),
                trace=tuple(products),
                pairs_tried=tried,
            )

        upper = products[half - 1 :]
        if all(b >= a for a, b in zip(upper, upper[1:])) and upper[-1] > upper[0]:
            growth.append((exponents, products))
        else:
            undecided = True

    if undecided or len(growth) == 0:
        raise Inconclusive(
            f"the rays of {instance.label(first)} and {instance.label(second)} neither stay bounded "
            f"nor grow monotonically up to N = {profile.power_bound}"
        )

    exponents, products = growth[0]
    return AsymptoticVerdict(
        related=False,
        growth_witness={
            "exponents": list(exponents),
            "from": str(products[half - 1]),
            "to": str(products[-1]),
            "window": [half, profile.power_bound],
        },
        trace=tuple(products),
        pairs_tried=len(pairs),
    )
