"""Registered acceptance suites, runnable one by one or all together."""
import itertools
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Dict, List, Sequence

from direction_space.constants import FOURPOINT_SAMPLES, SLIM_TRIANGLE_SAMPLES
from direction_space.cos.handle import Algebraic, COSHandle, StabilizerTuple
from direction_space.cos.oracle import cos_distance
from direction_space.cos.scale import ScaleMethod, limit_formula, scale_estimate
from direction_space.directions.asymptotic import asymptotic
from direction_space.directions.delta import delta_pseudometric
from direction_space.directions.report import direction_report
from direction_space.graph.generators import cycle_graph, random_connected_graph, sample_triples
from direction_space.graph.graph import GraphHandle
from direction_space.graph.hyperbolicity import (
    check_fellow_travel,
    check_ribbon,
    check_standard_estimate,
    estimate_hyperbolicity,
)
from direction_space.graph.metric import ball, geodesic
from direction_space.instances.base import Instance
from direction_space.instances.example_group import ExampleGroupInstance
from direction_space.instances.tree import TreeInstance
from direction_space.isometry.axis import certify_translation, find_axis
from direction_space.isometry.inverse_limit import InverseSystem, solve_inverse_limit
from direction_space.isometry.shortlex import shortlex_axis
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile

logger = Logger(__name__)

# same-end partner of shift:1@01, conjugated by a twist fixing its attracting end
SAME_END_CONJUGATE = "twist:=021,0=021*shift:1@01*twist:=021,0=021^-1"
DISTINCT_END_SHIFTS = ("shift:1@01", "shift:1@12", "shift:1@20")
TWO_DIRECTION_SAMPLE = (
    "a",
    "f:0=1|;a^2",
    "f:-1=1|3=1;a^3",
    "a^-1",
    "f:2=1|;a^-2",
    "f:0=1|0=1;a^-1",
)

# rows of δ₊(g, g⁻¹) on the 3-regular tree are compared at this tolerance
TREE_ROW_TOLERANCE = 1e-3
DISTINCT_DELTA_FLOOR = 1.9


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0

    def check(self, condition: bool, message: str):
        self.checks += 1
        if not condition:
            self.failures.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "details": self.details,
        }


SUITES: Dict[str, Callable[[TruncationProfile], SuiteResult]] = {}


def register(name: str):
    def wrapper(suite: Callable[[TruncationProfile], SuiteResult]):
        SUITES[name] = suite
        return suite

    return wrapper


# ==================================================
#               Geometry
# ==================================================


@register("tree-hyperbolicity")
def tree_hyperbolicity(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("tree-hyperbolicity")
    tree = TreeInstance(3)
    sample = ball(tree.graph, tree.graph.basepoint, 5)

    report = estimate_hyperbolicity(
        tree.graph,
        sample,
        horizon=10,
        num_samples=FOURPOINT_SAMPLES,
        num_triangles=SLIM_TRIANGLE_SAMPLES,
        seed=profile.seed,
    )
    result.check(len(sample) == 94, f"the radius 5 ball has {len(sample)} vertices, expected 94")
    result.check(report.delta_fourpoint == 0, f"four-point δ is {report.delta_fourpoint}, expected 0")
    result.check(report.delta_slim == 0, f"slim δ is {report.delta_slim}, expected 0")
    result.details = report.to_dict()
    return result


def _geometry_checks(
    result: SuiteResult, name: str, graph: GraphHandle, delta: Fraction, radius: int, horizon: int, seed: int
):
    for p, x, y in sample_triples(graph, radius, 500, seed=seed):
        result.check(
            check_standard_estimate(graph, p, x, y, delta, horizon),
            f"{name}: standard estimate fails at p={p}, x={x}, y={y}",
        )

        first = geodesic(graph, x, y, horizon)
        result.check(
            check_ribbon(graph, first, geodesic(graph, p, y, horizon), delta, horizon),
            f"{name}: ribbon bound fails for {x}..{y} against {p}..{y}",
        )
        result.check(
            check_fellow_travel(graph, first, geodesic(graph, y, x, horizon).reversed(), delta, horizon),
            f"{name}: geodesics between {x} and {y} do not fellow travel",
        )


@register("geometry-properties")
def geometry_properties(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("geometry-properties")

    tree = TreeInstance(3)
    _geometry_checks(result, "T3", tree.graph, Fraction(0), 4, 8, profile.seed)

    finite = {"C6": cycle_graph(6), "C8": cycle_graph(8)}
    for seed in range(2):
        finite[f"G(12, 0.3) seed {seed}"] = random_connected_graph(12, 0.3, seed=seed)

    for name, graph in finite.items():
        report = estimate_hyperbolicity(graph, graph.vertices(), horizon=len(graph), seed=profile.seed)
        delta = max(report.delta_slim, report.delta_fourpoint)
        result.details[name] = report.to_dict()
        _geometry_checks(result, name, graph, delta, len(graph), len(graph), profile.seed)

    return result


# ==================================================
#               Scale
# ==================================================


@register("scale-closed-forms")
def scale_closed_forms(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("scale-closed-forms")
    tree = TreeInstance(3)

    for length in (1, 2, 3):
        g = tree.translation("01", length)
        estimate = scale_estimate(tree, g, profile)
        result.check(
            estimate.method is ScaleMethod.TIDY_SEARCH and estimate.value == 2**length,
            f"s(shift {length}) = {estimate.value} by {estimate.method.name}, expected {2**length}",
        )

        limit = limit_formula(tree, g, profile, power=12)
        result.check(
            abs(limit.value - 2**length) <= 0.01 * 2**length,
            f"limit formula for shift {length} gives {limit.value}, expected {2**length} within 1%",
        )

        squared = scale_estimate(tree, g.power(2), profile)
        result.check(
            squared.value == estimate.value**2, f"s(g²) = {squared.value} but s(g)² = {estimate.value**2}"
        )
        result.details[g.label] = estimate.to_dict()

    return result


@register("example-scale")
def example_scale(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("example-scale")
    group = ExampleGroupInstance(2)

    for n in (1, 2, 3):
        for shift in (n, -n):
            element = group.element({0: 1}, {}, shift)
            estimate = scale_estimate(group, element, profile)
            result.check(
                estimate.method is ScaleMethod.CLOSED_FORM and estimate.value == 2**n,
                f"s({element.label}) = {estimate.value}, expected {2**n}",
            )
            limit = limit_formula(group, element, profile)
            result.check(
                math.isclose(limit.value, 2**n, rel_tol=1e-9),
                f"limit formula for {element.label} gives {limit.value}, expected {2**n}",
            )

    return result


# ==================================================
#               Directions
# ==================================================


def tree_row_value(n: int) -> float:
    return (math.log(3) + (n - 1) * math.log(2)) / (n * math.log(2))


@register("inverse-distance")
def inverse_distance(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("inverse-distance")

    group = ExampleGroupInstance(2)
    a = group.parse_element("a")
    for power_bound in sorted({4, 5, 10, profile.power_bound}):
        report = delta_pseudometric(group, a, group.inverse(a), replace(profile, power_bound=power_bound))
        result.check(
            isinstance(report.delta, Fraction) and report.delta == 2,
            f"δ(a, a⁻¹) = {report.delta} at N = {power_bound}, expected exactly 2",
        )

    tree = TreeInstance(3)
    g = tree.translation("01", 1)
    report = delta_pseudometric(tree, g, g.inverse(), profile)
    result.check(report.delta >= DISTINCT_DELTA_FLOOR, f"δ(g, g⁻¹) = {float(report.delta)} on T3")
    for row in report.forward.rows:
        result.check(
            abs(float(row.value) - tree_row_value(row.n)) <= TREE_ROW_TOLERANCE,
            f"δ₊ row {row.n} is {float(row.value)}, expected {tree_row_value(row.n)}",
        )
    result.details["tree"] = {"delta": float(report.delta), "last_row": report.forward.rows[-1].to_dict()}
    return result


@register("distinct-classes")
def distinct_classes(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("distinct-classes")
    tree = TreeInstance(3)

    shifts = [tree.parse_element(text) for text in DISTINCT_END_SHIFTS]
    for g, h in itertools.combinations(shifts, 2):
        report = delta_pseudometric(tree, g, h, profile)
        result.check(
            report.delta >= DISTINCT_DELTA_FLOOR, f"δ({g.label}, {h.label}) = {float(report.delta)}, expected >= 1.9"
        )

    conjugate = tree.parse_element(SAME_END_CONJUGATE)
    report = delta_pseudometric(tree, shifts[0], conjugate, profile)
    result.check(report.delta == 0, f"δ on a same-end pair is {float(report.delta)}, expected 0")
    result.check(
        all(row.k == row.n and row.index == 1 for row in report.forward.rows),
        "the same-end rows are not minimised by index 1 at k = n",
    )
    return result


@register("same-end-asymptotic")
def same_end_asymptotic(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("same-end-asymptotic")
    tree = TreeInstance(3)

    verdict = asymptotic(tree, tree.translation("01", 1), tree.translation("01", 2), profile)
    result.check(verdict.related, "shifts by 1 and 2 along the same end are not asymptotic")
    result.check(verdict.exponents == (2, 1), f"exponents are {verdict.exponents}, expected (2, 1)")
    result.check(len(set(verdict.trace)) == 1, "the bound witness is not constant along the rays")
    result.details = verdict.to_dict()
    return result


@register("two-directions")
def two_directions(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("two-directions")
    group = ExampleGroupInstance(2)

    elements = [group.parse_element(text) for text in TWO_DIRECTION_SAMPLE]
    report = direction_report(group, elements, profile)
    result.check(report.num_classes == 2, f"{report.num_classes} classes, expected 2")
    result.check(len(report.errors) == 0, f"errors: {report.errors}")

    for entry in report.pairs:
        if entry.same_class:
            continue
        delta = None if entry.delta is None else entry.delta.delta
        result.check(delta == 2, f"cross-class δ for pair {entry.first}, {entry.second} is {delta}, expected 2")

    result.details = {"classes": report.to_dict()["classes"]}
    return result


# ==================================================
#               Axis and inverse limits
# ==================================================


@register("axis")
def axis(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("axis")
    tree = TreeInstance(3)
    g = tree.translation("01", 1)

    window = find_axis(tree.graph, g, profile)
    result.check(len(window) >= 17, f"the axis window has {len(window)} vertices, expected at least 17")
    result.check(
        certify_translation(g, window.vertices, 1) == (1, 1), "g does not shift the window by one vertex"
    )

    for seed in (0, 1, 2):
        shortlex = shortlex_axis(tree.graph, g, profile, colour_seed=seed)
        result.check(
            shortlex.window.vertices == window.vertices, f"the short-lex axis for colour seed {seed} differs"
        )

    result.details = window.to_dict()
    return result


def random_inverse_system(rng: random.Random, depth: int, max_size: int) -> InverseSystem:
    levels = [list(range(rng.randint(1, max_size))) for _ in range(depth)]
    maps = [{y: rng.randrange(len(levels[i])) for y in levels[i + 1]} for i in range(depth - 1)]
    return InverseSystem(levels=levels, maps=maps)


@register("inverse-limit")
def inverse_limit(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("inverse-limit")
    rng = random.Random(profile.seed)

    for trial in range(200):
        system = random_inverse_system(rng, depth=8, max_size=6)
        solution = solve_inverse_limit(system)
        result.check(solution.thread in system.threads(), f"system {trial}: the selected thread is not a thread")
        result.check(
            all(size <= solution.size_bound for size in solution.projected_sizes),
            f"system {trial}: a projected level exceeds the size bound {solution.size_bound}",
        )

    return result


# ==================================================
#               Oracles
# ==================================================


@register("oracle-equivalence")
def oracle_equivalence(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("oracle-equivalence")

    tree = TreeInstance(3)
    root = tree.graph.basepoint
    automorphisms = tree.ball_automorphisms(root, 3)
    result.check(len(automorphisms) == 3072, f"{len(automorphisms)} ball automorphisms, expected 3072")

    vertices = ball(tree.graph, root, 3)
    for x in vertices:
        fixed = StabilizerTuple.of((root, x)).vertices
        for y in vertices:
            exact = tree.orbit_size(fixed, (y,))
            counted = tree.brute_force_orbit_size(fixed, (y,), root, 3, automorphisms=automorphisms)
            result.check(exact == counted, f"|G_{fixed}·{y}| is {exact}, brute force gives {counted}")

    for y, z in itertools.product(vertices, repeat=2):
        exact = tree.orbit_size((root,), (y, z))
        counted = tree.brute_force_orbit_size((root,), (y, z), root, 3, automorphisms=automorphisms)
        result.check(exact == counted, f"|G_root·({y}, {z})| is {exact}, brute force gives {counted}")

    group = ExampleGroupInstance(2)
    base = group.default_base(group.identity(), profile)
    handles = [group.act(group.element({}, {}, n), base) for n in range(-4, 5)]
    for first, second in itertools.product(handles, repeat=2):
        exact = group.index(first, second)
        counted = group.brute_force_index(first, second)
        result.check(exact == counted, f"[{first.params} : {second.params}] is {exact}, brute force gives {counted}")

    return result


def _check_triangles(result: SuiteResult, name: str, instance: Instance, handles: Sequence[COSHandle]):
    products = {(u, v): cos_distance(instance, u, v).product for u in handles for v in handles}
    for u in handles:
        result.check(products[(u, u)] == 1, f"{name}: d(U, U) != 0 at {u}")
    for u, v, w in itertools.product(handles, repeat=3):
        result.check(
            products[(u, w)] <= products[(u, v)] * products[(v, w)],
            f"{name}: triangle inequality fails at {u}, {v}, {w}",
        )
        result.check(products[(u, v)] == products[(v, u)], f"{name}: d is not symmetric at {u}, {v}")


@register("cos-metric")
def cos_metric(profile: TruncationProfile) -> SuiteResult:
    result = SuiteResult("cos-metric")

    tree = TreeInstance(3)
    tree_handles = [
        StabilizerTuple.of(vertices)
        for vertices in (
            ("",),
            ("0",),
            ("1",),
            ("2",),
            ("01",),
            ("12",),
            ("", "0"),
            ("0", "01"),
            ("1", "12"),
            ("", "2", "20"),
        )
    ]
    _check_triangles(result, "T3", tree, tree_handles)

    group = ExampleGroupInstance(2)
    params = [(0, 0), (1, 0), (0, 1), (-1, 1), (1, -1), (2, 2), (-2, 3), (3, -2), (-1, -1), (4, 0)]
    _check_triangles(result, "example", group, [Algebraic(family="U", params=p) for p in params])

    return result


def run_suite(name: str, profile: TruncationProfile) -> List[SuiteResult]:
    """Run one registered suite, or every suite for `all`."""
    assert name == "all" or name in SUITES, f"unknown suite {name}, expected one of {['all', *SUITES]}"
    names = list(SUITES) if name == "all" else [name]

    results = []
    for suite_name in names:
        logger.info(f"running suite {suite_name}")
        results.append(SUITES[suite_name](profile))
    return results
