from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from direction_space.graph.exception import NotGeodesic, Unreachable
from direction_space.graph.generators import cycle_graph, path_graph, random_connected_graph
from direction_space.graph.metric import (
    GeodesicPath,
    ball,
    distance,
    distance_to_set,
    geodesic,
    geodesic_interval,
    gromov_product,
    hausdorff_distance,
    is_geodesic,
    validate_geodesic,
)
from direction_space.instances.tree import TreeGraph, tree_path


def reduced_words(alphabet: str, max_size: int):
    def reduce(letters):
        return "".join(a for i, a in enumerate(letters) if i == 0 or letters[i - 1] != a)

    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(reduce)


@pytest.mark.parametrize("u, v, expected", [("", "", 0), ("01", "02", 2), ("", "012", 3), ("0", "1", 2)])
def test_tree_distance(tree, u, v, expected):
    assert distance(tree.graph, u, v) == expected


def test_geodesic_in_a_tree(tree):
    path = geodesic(tree.graph, "01", "2")

    assert path.vertices == ("01", "0", "", "2")
    assert path.length == 3
    assert path.start == "01" and path.end == "2"
    assert is_geodesic(tree.graph, path)


def test_geodesic_takes_the_smallest_code_on_ties():
    graph = cycle_graph(6)

    path = geodesic(graph, "0", "3")

    assert path.vertices == ("0", "1", "2", "3")
    assert path.reversed().vertices == ("3", "2", "1", "0")


def test_validate_a_path_that_is_not_geodesic():
    graph = cycle_graph(6)
    path = GeodesicPath(("0", "1", "2", "3", "4"))

    assert is_geodesic(graph, path) is False
    with pytest.raises(NotGeodesic):
        validate_geodesic(graph, path)


def test_distance_beyond_the_horizon():
    HORIZON = 2
    graph = path_graph(5)

    assert distance(graph, "0", "2", HORIZON) == 2
    with pytest.raises(Unreachable) as e:
        distance(graph, "0", "4", HORIZON)

    assert e.value.horizon == HORIZON


def test_gromov_product_is_exact(tree):
    assert gromov_product(tree.graph, "01", "02", "") == Fraction(1)
    assert gromov_product(cycle_graph(5), "2", "3", "0") == Fraction(3, 2)


def test_ball_of_a_regular_tree(tree):
    assert ball(tree.graph, "", 0) == [""]
    assert ball(tree.graph, "", 1) == ["", "0", "1", "2"]
    assert len(ball(tree.graph, "", 3)) == tree.tree.ball_size(3) == 22
    assert len(ball(tree.graph, "", 5)) == 94


def test_geodesic_interval_of_a_cycle():
    graph = cycle_graph(6)

    interval = geodesic_interval(graph, "0", "3")

    assert interval.layers == (("0",), ("1", "5"), ("2", "4"), ("3",))
    assert interval.vertices == ["0", "1", "2", "3", "4", "5"]
    assert len(interval.edges) == 6


def test_distance_to_a_set_and_hausdorff_distance(tree):
    assert distance_to_set(tree.graph, "01", ["", "2"]) == 2
    assert hausdorff_distance(tree.graph, [""], ["0", "1"]) == 1
    assert hausdorff_distance(tree.graph, ["0"], ["0"]) == 0

    with pytest.raises(Unreachable):
        distance_to_set(path_graph(5), "0", ["4"], horizon=2)


@given(u=reduced_words("012", 6), v=reduced_words("012", 6))
def test_tree_distance_is_the_length_of_the_tree_path(u, v):
    graph = TreeGraph(3)

    assert distance(graph, u, v) == len(tree_path(u, v)) - 1
    assert geodesic(graph, u, v).vertices == tuple(tree_path(u, v))


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 20), n=st.integers(4, 10), data=st.data())
def test_metric_axioms_on_random_graphs(seed, n, data):
    graph = random_connected_graph(n, 0.5, seed=seed)
    vertices = graph.vertices()
    x, y, z = (data.draw(st.sampled_from(vertices)) for _ in range(3))

    assert distance(graph, x, x, n) == 0
    assert distance(graph, x, y, n) == distance(graph, y, x, n)
    assert distance(graph, x, z, n) <= distance(graph, x, y, n) + distance(graph, y, z, n)

    product = gromov_product(graph, x, y, z, n)
    assert 0 <= product <= min(distance(graph, x, z, n), distance(graph, y, z, n))
