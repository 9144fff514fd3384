import pytest

from direction_space.directions.delta import Verdict
from direction_space.directions.report import (
    boundary_orbit_probe,
    direction_report,
    double_stabilizer_witness,
    moves_towards_infinity,
)

TREE_SAMPLE = ["shift:1@01", "shift:1@12", "rotate:120@", "shift:2@01"]


@pytest.fixture
def tree_report(tree, small_profile):
    elements = [tree.parse_element(text) for text in TREE_SAMPLE]
    return direction_report(tree, elements, small_profile)


def test_moves_towards_infinity(tree, example_group, small_profile):
    assert moves_towards_infinity(tree, tree.parse_element("shift:1@01"), small_profile)
    assert not moves_towards_infinity(tree, tree.parse_element("rotate:120@"), small_profile)
    assert not moves_towards_infinity(example_group, example_group.parse_element("f:0=1|"), small_profile)


def test_tree_directions_group_by_attracting_ends(tree_report):
    assert tree_report.towards_infinity == [0, 1, 3]
    assert tree_report.classes == [[0, 3], [1]]
    assert tree_report.num_classes == 2
    assert tree_report.class_of(3) == 0


def test_tree_direction_table_is_consistent(tree_report):
    entries = {(entry.first, entry.second): entry for entry in tree_report.pairs}

    assert sorted(entries) == [(0, 1), (0, 3), (1, 3)]
    assert entries[(0, 3)].same_class
    assert entries[(0, 3)].delta.verdict is Verdict.SAME_CLASS
    assert entries[(0, 3)].asymptotic.related
    assert entries[(0, 1)].delta.verdict is Verdict.DISTINCT
    assert entries[(0, 1)].witness is not None
    assert tree_report.consistent


def test_report_to_dict(tree_report):
    result = tree_report.to_dict()

    assert result["elements"] == TREE_SAMPLE
    assert result["classes"] == [["shift:1@01", "shift:2@01"], ["shift:1@12"]]
    assert result["consistent"] is True
    assert result["errors"] == {}


def test_example_group_directions(example_group, small_profile):
    elements = [example_group.parse_element(text) for text in ["a", "a^-1", "f:0=1|;a^2", "f:0=1|"]]

    report = direction_report(example_group, elements, small_profile)

    assert report.towards_infinity == [0, 1, 2]
    assert report.classes == [[0, 2], [1]]
    assert report.consistent


def test_double_stabilizer_witness(tree, small_profile):
    first = tree.parse_element("shift:1@01")
    second = tree.parse_element("shift:1@12")

    witness = double_stabilizer_witness(tree, first, second, small_profile)

    assert witness.maximum >= 1
    assert witness.to_dict()["max"] == str(witness.maximum)


def test_boundary_orbit_probe(tree, example_group, small_profile):
    g = tree.parse_element("shift:1@01")
    rotations = [tree.parse_element(text) for text in ["identity", "rotate:120@", "rotate:201@"]]
    swap = [tree.parse_element(text) for text in ["identity", "rotate:021@"]]

    assert boundary_orbit_probe(tree, g, rotations, small_profile) == 3
    assert boundary_orbit_probe(tree, g, swap, small_profile) == 2

    a = example_group.parse_element("a")
    conjugators = [example_group.parse_element(text) for text in ["identity", "f:0=1|"]]
    assert boundary_orbit_probe(example_group, a, conjugators, small_profile) == 1
