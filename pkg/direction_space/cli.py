import argparse
import sys
from typing import Any, Dict, List, Optional, Tuple

from direction_space.constants import (
    END_THRESHOLD,
    EXPONENT_BOUND,
    FOURPOINT_EXHAUSTIVE_LIMIT,
    FOURPOINT_SAMPLES,
    HORIZON,
    MIN_POWER_BOUND,
    POWER_BOUND,
    SEED,
)
from direction_space.cos.exception import IncompatibleInstances
from direction_space.cos.handle import parse_handle
from direction_space.cos.oracle import cos_distance
from direction_space.cos.scale import ScaleMethod, modular_ratio, scale_estimate
from direction_space.directions.delta import delta_pseudometric
from direction_space.directions.report import direction_report
from direction_space.exception import DirectionSpaceError
from direction_space.graph.graph import GraphHandle
from direction_space.graph.hyperbolicity import estimate_hyperbolicity
from direction_space.graph.metric import ball
from direction_space.instances.base import Instance
from direction_space.instances.loader import parse_element, parse_instance
from direction_space.isometry.axis import find_axis
from direction_space.isometry.classify import classify
from direction_space.isometry.shortlex import shortlex_axis
from direction_space.logger import Logger
from direction_space.profile import TruncationProfile, set_seed
from direction_space.report import delta_rows, envelope, error_payload, rows_to_csv, to_json
from direction_space.verification import SUITES, run_suite

logger = Logger(__name__)

# a command returns its JSON result, CSV rows when --csv applies, and a one-line summary
Outcome = Tuple[Dict[str, Any], Optional[List[Dict[str, Any]]], str]


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _power_bound(text: str) -> int:
    value = int(text)
    if value < MIN_POWER_BOUND:
        raise argparse.ArgumentTypeError(f"the power bound must be at least {MIN_POWER_BOUND}, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _profile(args: argparse.Namespace) -> TruncationProfile:
    return TruncationProfile(
        horizon=args.horizon,
        power_bound=args.power_bound,
        exponent_bound=args.exponent_bound,
        threshold=args.threshold,
        seed=args.seed,
    )


def _graph_of(instance: Instance) -> GraphHandle:
    if instance.graph is None:
        raise IncompatibleInstances(f"{instance.kind} does not act on a graph")
    return instance.graph


# ==================================================
#               Commands
# ==================================================


def _hyperbolicity_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    graph = _graph_of(parse_instance(args.instance))
    sample = ball(graph, graph.basepoint, args.radius)
    num_samples = None if len(sample) <= FOURPOINT_EXHAUSTIVE_LIMIT else FOURPOINT_SAMPLES

    report = estimate_hyperbolicity(
        graph, sample, horizon=max(profile.horizon, 2 * args.radius), num_samples=num_samples, seed=profile.seed
    )
    summary = f"δ four-point = {report.delta_fourpoint}, δ slim = {report.delta_slim} over {report.sample_spec}"
    return report.to_dict(), None, summary


def _classify_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    element = parse_element(instance, args.element)
    result = classify(_graph_of(instance), element, profile).to_dict()
    return {"element": element.label, **result}, None, f"{element.label} is {result['kind']}"


def _axis_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    element = parse_element(instance, args.element)
    graph = _graph_of(instance)

    if args.shortlex:
        result = shortlex_axis(graph, element, profile, colour_seed=profile.seed).to_dict()
    else:
        result = find_axis(graph, element, profile).to_dict()

    summary = f"axis window of {len(result['vertices'])} vertices, period {result['period']}"
    return {"element": element.label, "shortlex": args.shortlex, **result}, None, summary


def _scale_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    element = parse_element(instance, args.element)
    method = None if args.method is None else ScaleMethod[args.method.upper()]

    estimate = scale_estimate(instance, element, profile, method=method)
    result = {"element": instance.label(element), **estimate.to_dict()}
    if args.modular:
        ratio = modular_ratio(instance, element, profile)
        result["modular_ratio"] = f"{ratio.numerator}/{ratio.denominator}"
    return result, None, f"s({instance.label(element)}) = {estimate.value} by {estimate.method.name}"


def _cosdist_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    first, second = parse_handle(args.first), parse_handle(args.second)
    distance = cos_distance(instance, first, second)

    result = {"first": first.to_dict(), "second": second.to_dict(), **distance.to_dict()}
    return result, None, f"d(U, V) = log {distance.product} ≈ {distance.value}"


def _delta_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    first = parse_element(instance, args.first)
    second = parse_element(instance, args.second)

    report = delta_pseudometric(instance, first, second, profile)
    result = report.to_dict()
    summary = f"δ({report.first}, {report.second}) = {result['delta']} ± {result['slack']}: {report.verdict.value}"
    return result, delta_rows(result), summary


def _directions_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    instance = parse_instance(args.instance)
    elements = [parse_element(instance, text) for text in args.elements]

    report = direction_report(instance, elements, profile)
    result = report.to_dict()
    summary = f"{report.num_classes} classes among {len(report.towards_infinity)} elements towards infinity"
    return result, delta_rows(result), summary


def _verify_command(args: argparse.Namespace, profile: TruncationProfile) -> Outcome:
    results = run_suite(args.suite, profile)
    passed = all(r.passed for r in results)
    summary = ", ".join(f"{r.name}: {'ok' if r.passed else 'FAILED'}" for r in results)
    return {"suites": [r.to_dict() for r in results], "passed": passed}, None, summary


# ==================================================
#               Parser
# ==================================================


def _common_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--horizon", type=_positive, default=HORIZON, help="Radius of ball scans and searches.")
    parser.add_argument("--power-bound", type=_power_bound, default=POWER_BOUND, help="Largest power N.")
    parser.add_argument("--exponent-bound", type=_positive, default=EXPONENT_BOUND, help="Largest exponent K of asymptotic pairs.")
    parser.add_argument("--threshold", type=_positive, default=END_THRESHOLD, help="Gromov-product threshold for ends.")
    parser.add_argument("--seed", type=_non_negative, default=SEED, help="Seed of every sampled scan.")
    parser.add_argument("--csv", action="store_true", help="Write row data as CSV instead of JSON.")
    parser.add_argument("--verbose", "-v", action="count", default=0, help="Log to stderr, twice for debug.")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="direction-space",
        description="Hyperbolicity, scale and directions of groups acting on graphs, at finite truncation.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("hyperbolicity", parents=[common], help="Estimate δ on a ball.")
    sub.add_argument("instance")
    sub.add_argument("--radius", type=_non_negative, default=3)
    sub.set_defaults(func=_hyperbolicity_command)

    sub = subparsers.add_parser("classify", parents=[common], help="Elliptic, hyperbolic or undetermined.")
    sub.add_argument("instance")
    sub.add_argument("element")
    sub.set_defaults(func=_classify_command)

    sub = subparsers.add_parser("axis", parents=[common], help="A translated geodesic window.")
    sub.add_argument("instance")
    sub.add_argument("element")
    sub.add_argument("--shortlex", action="store_true", help="Build the axis from short-lex paths.")
    sub.set_defaults(func=_axis_command)

    sub = subparsers.add_parser("scale", parents=[common], help="The scale s(g).")
    sub.add_argument("instance")
    sub.add_argument("element")
    sub.add_argument("--method", choices=["limit_formula", "tidy_search"], default=None)
    sub.add_argument("--modular", action="store_true", help="Also report s(g)/s(g⁻¹).")
    sub.set_defaults(func=_scale_command)

    sub = subparsers.add_parser("cosdist", parents=[common], help="COS distance between two subgroups.")
    sub.add_argument("instance")
    sub.add_argument("first")
    sub.add_argument("second")
    sub.set_defaults(func=_cosdist_command)

    sub = subparsers.add_parser("delta", parents=[common], help="The pseudometric δ between two elements.")
    sub.add_argument("instance")
    sub.add_argument("first")
    sub.add_argument("second")
    sub.set_defaults(func=_delta_command)

    sub = subparsers.add_parser("directions", parents=[common], help="Classes of a sample of elements.")
    sub.add_argument("instance")
    sub.add_argument("elements", nargs="+")
    sub.set_defaults(func=_directions_command)

    sub = subparsers.add_parser("verify", parents=[common], help="Run an acceptance suite.")
    sub.add_argument("suite", choices=["all", *SUITES])
    sub.set_defaults(func=_verify_command)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose > 0:
        logger.set_level("debug" if args.verbose > 1 else "info")

    profile = _profile(args)
    set_seed(profile.seed)

    try:
        result, rows, summary = args.func(args, profile)
    except (DirectionSpaceError, AssertionError) as e:
        sys.stdout.write(to_json(envelope(args.command, profile, error_payload(e))) + "\n")
        sys.stderr.write(f"error: {e}\n")
        return 1

    if args.csv and rows is not None:
        sys.stdout.write(rows_to_csv(rows))
    else:
        sys.stdout.write(to_json(envelope(args.command, profile, result)) + "\n")
    sys.stderr.write(summary + "\n")

    if args.command == "verify" and not result["passed"]:
        return 1
    return 0
