from fractions import Fraction

import pytest
import torch

from direction_space.graph.exception import EmptySample, EndpointMismatch
from direction_space.graph.generators import cycle_graph
from direction_space.graph.hyperbolicity import (
    check_fellow_travel,
    check_ribbon,
    check_standard_estimate,
    distance_matrix,
    estimate_hyperbolicity,
    fourpoint_delta,
    sequence_converges_at_infinity,
)
from direction_space.graph.metric import GeodesicPath, ball, geodesic


def test_a_tree_is_zero_hyperbolic(tree):
    RADIUS = 3
    sample = ball(tree.graph, tree.graph.basepoint, RADIUS)

    report = estimate_hyperbolicity(tree.graph, sample, horizon=2 * RADIUS)

    assert report.delta_fourpoint == 0
    assert report.delta_slim == 0
    assert report.sample_spec == "22 vertices, all quadruples"
    assert report.to_dict() == {"delta_slim": 0.0, "delta_fourpoint": 0.0, "sample_spec": "22 vertices, all quadruples"}


def test_sampled_fourpoint_scan_is_seeded(tree):
    NUM_SAMPLES = 1000
    SEED = 42
    sample = ball(tree.graph, tree.graph.basepoint, 2)

    report = estimate_hyperbolicity(tree.graph, sample, num_samples=NUM_SAMPLES, seed=SEED)

    assert report.delta_fourpoint == 0
    assert report.sample_spec == f"10 vertices, {NUM_SAMPLES} quadruples, seed {SEED}"


def test_a_cycle_is_not_zero_hyperbolic():
    graph = cycle_graph(6)

    report = estimate_hyperbolicity(graph, graph.vertices(), horizon=len(graph))

    assert report.delta_fourpoint >= 1
    assert report.delta_slim >= 1
    assert isinstance(report.delta_fourpoint, Fraction)


def test_fourpoint_delta_on_a_distance_matrix():
    graph = cycle_graph(6)
    dists = distance_matrix(graph, graph.vertices(), horizon=6)

    assert dists.shape == (6, 6)
    assert torch.equal(dists, dists.T)
    assert fourpoint_delta(dists) == fourpoint_delta(dists.clone())


def test_estimate_over_an_empty_sample(tree):
    with pytest.raises(EmptySample):
        estimate_hyperbolicity(tree.graph, [])


def test_geometric_estimates_on_a_tree(tree):
    DELTA = Fraction(0)
    first = geodesic(tree.graph, "01", "2")
    second = geodesic(tree.graph, "0", "2")

    assert check_standard_estimate(tree.graph, "1", "01", "2", DELTA)
    assert check_ribbon(tree.graph, first, second, DELTA)
    assert check_fellow_travel(tree.graph, first, geodesic(tree.graph, "2", "01").reversed(), DELTA)


def test_fellow_travel_needs_shared_endpoints(tree):
    first = geodesic(tree.graph, "01", "2")
    second = GeodesicPath(("0", "", "2"))

    with pytest.raises(EndpointMismatch):
        check_fellow_travel(tree.graph, first, second, Fraction(0))


def test_sequence_converges_at_infinity(tree):
    THRESHOLD = 2
    ray = ["0101010101"[:n] for n in range(1, 9)]

    assert sequence_converges_at_infinity(tree.graph, ray, THRESHOLD) is True
    assert sequence_converges_at_infinity(tree.graph, ["0", "1", "0", "1"], THRESHOLD) is False
