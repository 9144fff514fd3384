from dataclasses import dataclass, field
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

from direction_space.cos.handle import StabilizerTuple
from direction_space.cos.oracle import index
from direction_space.cos.scale import scale_estimate
from direction_space.directions.asymptotic import AsymptoticVerdict, asymptotic
from direction_space.directions.delta import DeltaReport, Verdict, delta_pseudometric
from direction_space.directions.exception import Inconclusive
from direction_space.exception import DirectionSpaceError
from direction_space.instances.base import GraphInstance, Instance
from direction_space.isometry.ends import TruncatedEnd, attracting_end, same_end
from direction_space.logger import Logger
from direction_space.parallel.executor import run_grid
from direction_space.profile import TruncationProfile

logger = Logger(__name__)


def moves_towards_infinity(instance: Instance, element: Any, profile: TruncationProfile) -> bool:
    return scale_estimate(instance, element, profile).value > 1


@dataclass(frozen=True)
class DoubleStabilizerWitness:
    """|G_{gⁿv, hᵐv} · v| over n, m <= N."""

    maximum: int
    constant: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"max": str(self.maximum), "constant": self.constant}


@dataclass
class PairEntry:
    first: int
    second: int
    same_class: bool
    delta: Optional[DeltaReport] = None
    asymptotic: Optional[AsymptoticVerdict] = None
    witness: Optional[DoubleStabilizerWitness] = None
    error: Optional[str] = None

    @property
    def consistent(self) -> bool:
        """Same-class pairs are asymptotic with δ ≈ 0, distinct pairs have δ ≈ 2."""
        if self.delta is None:
            return False
        if self.same_class:
            related = self.asymptotic is None or self.asymptotic.related
            return related and self.delta.verdict is Verdict.SAME_CLASS
        return self.delta.verdict is Verdict.DISTINCT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [self.first, self.second],
            "same_class": self.same_class,
            "delta": None if self.delta is None else self.delta.to_dict(),
            "asymptotic": None if self.asymptotic is None else self.asymptotic.to_dict(),
            "double_stabilizer": None if self.witness is None else self.witness.to_dict(),
            "consistent": self.consistent,
            "error": self.error,
        }


@dataclass
class DirectionReport:
    labels: List[str]
    towards_infinity: List[int]
    classes: List[List[int]]
    pairs: List[PairEntry] = field(default_factory=list)
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def consistent(self) -> bool:
        return len(self.errors) == 0 and all(entry.consistent for entry in self.pairs)

    def class_of(self, position: int) -> int:
        return next(i for i, members in enumerate(self.classes) if position in members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "elements": self.labels,
            "towards_infinity": self.towards_infinity,
            "classes": [[self.labels[i] for i in members] for members in self.classes],
            "pairs": [entry.to_dict() for entry in self.pairs],
            "errors": self.errors,
            "consistent": self.consistent,
        }


def double_stabilizer_witness(
    instance: GraphInstance, first: Any, second: Any, profile: TruncationProfile, num_workers: Optional[int] = None
) -> DoubleStabilizerWitness:
    """The orbit of the basepoint under G_{gⁿ(v)} ∩ G_{hᵐ(v)} for 1 <= n, m <= N."""
    v = instance.graph.basepoint
    first_orbit = [first.apply_power(v, n) for n in range(1, profile.power_bound + 1)]
    second_orbit = [second.apply_power(v, m) for m in range(1, profile.power_bound + 1)]

    base = StabilizerTuple((v,))
    counts = run_grid(
        partial(index, instance),
        [(StabilizerTuple.of((x, y)), base) for x in first_orbit for y in second_orbit],
        num_workers=num_workers,
    )
    return DoubleStabilizerWitness(maximum=max(counts), constant=len(set(counts)) == 1)


def _group_by_ends(members: List[int], ends: Dict[int, TruncatedEnd], threshold: int):
    classes: List[List[int]] = []
    for i in members:
        for group in classes:
            if same_end(ends[group[0]], ends[i], threshold):
                group.append(i)
                break
        else:
            classes.append([i])
    return classes


def _group_by_asymptotic(
    instance: Instance, elements: Sequence[Any], members: List[int], profile: TruncationProfile, errors: Dict[str, str]
):
    classes: List[List[int]] = []
    for i in members:
        for group in classes:
            try:
                related = asymptotic(instance, elements[group[0]], elements[i], profile).related
            except Inconclusive as e:
                errors[f"{group[0]},{i}"] = str(e)
                related = False
            if related:
                group.append(i)
                break
        else:
            classes.append([i])
    return classes


def _pair_entry(
    instance: Instance,
    elements: Sequence[Any],
    classes: List[List[int]],
    profile: TruncationProfile,
    first: int,
    second: int,
) -> PairEntry:
    same_class = any(first in group and second in group for group in classes)
    entry = PairEntry(first=first, second=second, same_class=same_class)

    try:
        entry.delta = delta_pseudometric(instance, elements[first], elements[second], profile)
        if isinstance(instance, GraphInstance):
            if same_class:
                entry.asymptotic = asymptotic(instance, elements[first], elements[second], profile)
            else:
                entry.witness = double_stabilizer_witness(instance, elements[first], elements[second], profile)
    except DirectionSpaceError as e:
        entry.error = f"{type(e).__name__}: {e}"
        logger.warning(f"pair ({first}, {second}) failed: {entry.error}")

    return entry


def direction_report(
    instance: Instance, elements: Sequence[Any], profile: TruncationProfile, num_workers: Optional[int] = None
) -> DirectionReport:
    """Classify a sample of elements into directions and tabulate δ between them.

    Elements of scale 1 are dropped. Graph instances group by attracting ends,
    algebraic ones by the asymptotic relation. A failing pair is recorded on
    its entry and the rest of the table is still computed.
    """
    labels = [instance.label(e) for e in elements]
    report = DirectionReport(labels=labels, towards_infinity=[], classes=[])

    for i, element in enumerate(elements):
        try:
            if moves_towards_infinity(instance, element, profile):
                report.towards_infinity.append(i)
        except DirectionSpaceError as e:
            report.errors[str(i)] = f"{type(e).__name__}: {e}"

    members = list(report.towards_infinity)
    if isinstance(instance, GraphInstance):
        ends = {}
        for i in list(members):
            try:
                ends[i] = attracting_end(instance.graph, elements[i], profile)
            except DirectionSpaceError as e:
                report.errors[str(i)] = f"{type(e).__name__}: {e}"
                members.remove(i)
        report.classes = _group_by_ends(members, ends, profile.threshold)
    else:
        report.classes = _group_by_asymptotic(instance, elements, members, profile, report.errors)

    cells: List[Tuple[int, int]] = [(a, b) for n, a in enumerate(members) for b in members[n + 1 :]]
    report.pairs = run_grid(
        partial(_pair_entry, instance, elements, report.classes, profile), cells, num_workers=num_workers
    )

    logger.info(f"{len(labels)} elements, {len(members)} towards infinity, {report.num_classes} classes")
    return report


def boundary_orbit_probe(
    instance: Instance, element: Any, conjugators: Sequence[Any], profile: TruncationProfile
) -> int:
    """The number of distinct ends among h(ω₋(g)) for the given conjugators h.

    h(ω₋(g)) is the attracting end of h g⁻¹ h⁻¹. On algebraic instances two
    ends coincide when those conjugates are asymptotic.
    """
    inverse = instance.inverse(element)
    conjugates = [
        instance.compose(instance.compose(h, inverse), instance.inverse(h)) for h in conjugators
    ]
    positions = list(range(len(conjugates)))

    if isinstance(instance, GraphInstance):
        ends = {i: attracting_end(instance.graph, c, profile) for i, c in enumerate(conjugates)}
        return len(_group_by_ends(positions, ends, profile.threshold))

    errors: Dict[str, str] = {}
    classes = _group_by_asymptotic(instance, conjugates, positions, profile, errors)
    if len(errors) > 0:
        raise Inconclusive(f"the conjugates of {instance.label(element)} could not be compared: {errors}")
    return len(classes)
