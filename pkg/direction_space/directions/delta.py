import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Any, Dict, List, Optional, Tuple, Union

from direction_space.constants import DISPLAY_DIGITS
from direction_space.cos.handle import COSHandle
from direction_space.cos.oracle import index
from direction_space.cos.scale import scale_estimate
from direction_space.directions.exception import NotTowardsInfinity
from direction_space.directions.ray import Ray, ray_base
from direction_space.instances.base import Instance
from direction_space.logger import Logger
from direction_space.parallel.executor import run_grid
from direction_space.profile import TruncationProfile

logger = Logger(__name__)

Value = Union[Fraction, float]

# a float is within this of an integer power when it is treated as exact
_LOG_TOLERANCE = 1e-9


def display(value: Value) -> float:
    return float(f"{float(value):.{DISPLAY_DIGITS}g}")


class Verdict(Enum):
    SAME_CLASS = "same-class"
    DISTINCT = "distinct"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DeltaPlusRow:
    n: int
    k: int
    index: int
    value: Value
    slack: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "index": str(self.index),
            "value": display(self.value),
            "slack": display(self.slack),
        }


@dataclass(frozen=True)
class DeltaPlusTable:
    """Rows of δ₊,ₙ(α, β) for n = 1..N and their truncated limsup."""

    first: str
    second: str
    rows: Tuple[DeltaPlusRow, ...]
    headline: Value
    slack: float

    def row(self, n: int) -> DeltaPlusRow:
        return self.rows[n - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "first": self.first,
            "second": self.second,
            "headline": display(self.headline),
            "slack": display(self.slack),
            "rows": [row.to_dict() for row in self.rows],
        }


@dataclass(frozen=True)
class DeltaReport:
    first: str
    second: str
    forward: DeltaPlusTable
    backward: DeltaPlusTable
    delta: Value
    slack: float
    verdict: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "first": self.first,
            "second": self.second,
            "deltaPlus_ab": display(self.forward.headline),
            "deltaPlus_ba": display(self.backward.headline),
            "delta": display(self.delta),
            "rows": [row.to_dict() for row in self.forward.rows],
            "rows_ba": [row.to_dict() for row in self.backward.rows],
            "verdict": self.verdict.value,
            "slack": display(self.slack),
        }


def _scale_towards_infinity(instance: Instance, element: Any, profile: TruncationProfile) -> Union[int, float]:
    scale = scale_estimate(instance, element, profile).value
    if not scale > 1:
        raise NotTowardsInfinity(f"{instance.label(element)} has scale {scale}")
    return scale


def max_exponent(first_scale, second_scale, n: int) -> int:
    """The largest k with s(βᵏ) <= s(αⁿ)."""
    if isinstance(first_scale, int) and isinstance(second_scale, int):
        ceiling, k = first_scale**n, 0
        while second_scale ** (k + 1) <= ceiling:
            k += 1
        return k
    return math.floor(n * math.log(first_scale) / math.log(second_scale) + _LOG_TOLERANCE)


def row_value(value: int, n: int, scale: Union[int, float]) -> Value:
    """log(index)/(n·log s(α)), as a fraction when the index is a power of s(α)."""
    exponent = math.log(value) / math.log(scale)
    if isinstance(scale, int) and scale ** round(exponent) == value:
        return Fraction(round(exponent), n)
    return exponent / n


def _headline(rows: List[DeltaPlusRow], profile: TruncationProfile) -> Value:
    # NOTE: ties keep the earliest row so the exact value wins over an equal float
    upper = [row for row in rows if row.n in profile.upper_half]
    return max(upper, key=lambda row: float(row.value)).value


def delta_plus(
    instance: Instance,
    first: Any,
    second: Any,
    profile: TruncationProfile,
    first_base: Optional[COSHandle] = None,
    second_base: Optional[COSHandle] = None,
    num_workers: Optional[int] = None,
) -> DeltaPlusTable:
    """δ₊,ₙ(α, β) = min over admissible k of log[αⁿU : αⁿU ∩ βᵏV] / (n·log s(α)).

    k runs over every admissible exponent, s(βᵏ) <= s(αⁿ), so K widens to the
    admissible bound at n = N when the profile's exponent bound falls short. The minimising k is the smallest one
    attaining the least index. Row slack is log C/(n·log s(α)) for the index
    constant C of the instance.

    Raises:
        NotTowardsInfinity: α or β has scale 1
        OracleHorizonExceeded: an index is too large to count
    """
    first_scale = _scale_towards_infinity(instance, first, profile)
    second_scale = _scale_towards_infinity(instance, second, profile)

    first_base = ray_base(instance, first, profile) if first_base is None else first_base
    second_base = ray_base(instance, second, profile) if second_base is None else second_base

    first_terms = Ray(instance, first, first_base).terms(profile.power_bound)
    bounds = {n: max_exponent(first_scale, second_scale, n) for n in range(1, profile.power_bound + 1)}
    second_terms = Ray(instance, second, second_base).terms(bounds[profile.power_bound])

    cells = [(n, k) for n, bound in bounds.items() for k in range(bound + 1)]
    indices = run_grid(
        partial(index, instance),
        [(first_terms[n], second_terms[k]) for n, k in cells],
        num_workers=num_workers,
    )

    best: Dict[int, Tuple[int, int]] = {}
    for (n, k), value in zip(cells, indices):
        if n not in best or value < best[n][1]:
            best[n] = (k, value)

    log_scale = math.log(first_scale)
    log_constant = math.log(instance.index_constant)
    rows = []
    for n in range(1, profile.power_bound + 1):
        k, value = best[n]
        rows.append(
            DeltaPlusRow(
                n=n,
                k=k,
                index=value,
                value=row_value(value, n, first_scale),
                slack=log_constant / (n * log_scale),
            )
        )

    slack = (log_constant + math.log(second_scale)) / (profile.upper_half.start * log_scale)
    table = DeltaPlusTable(
        first=instance.label(first),
        second=instance.label(second),
        rows=tuple(rows),
        headline=_headline(rows, profile),
        slack=slack,
    )
    logger.debug(f"δ₊({table.first}, {table.second}) = {display(table.headline)} ± {display(slack)}")
    return table


def verdict(delta: Value, slack: float) -> Verdict:
    if delta <= 2 * slack:
        return Verdict.SAME_CLASS
    if delta >= 2 - 2 * slack:
        return Verdict.DISTINCT
    return Verdict.INCONCLUSIVE


def delta_pseudometric(
    instance: Instance,
    first: Any,
    second: Any,
    profile: TruncationProfile,
    num_workers: Optional[int] = None,
) -> DeltaReport:
    """δ(α, β) = δ₊(α, β) + δ₊(β, α) on the default ray bases."""
    forward = delta_plus(instance, first, second, profile, num_workers=num_workers)
    backward = delta_plus(instance, second, first, profile, num_workers=num_workers)

    delta = forward.headline + backward.headline
    slack = max(forward.slack, backward.slack)
    return DeltaReport(
        first=forward.first,
        second=forward.second,
        forward=forward,
        backward=backward,
        delta=delta,
        slack=slack,
        verdict=verdict(delta, slack),
    )
