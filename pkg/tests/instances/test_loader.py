import json

import pytest

from direction_space.instances import (
    CosetGraphInstance,
    ExampleGroupInstance,
    FiniteGraphInstance,
    LadderInstance,
    TreeInstance,
    build_coset_graph,
    build_example_group,
    build_tree,
)
from direction_space.instances.exception import InvariantViolation, OrderTooSmall, ParseError
from direction_space.instances.loader import (
    finite_graph_from_dict,
    isometry_from_dict,
    load_finite_graph,
    load_isometry,
    parse_element,
    parse_instance,
)

SQUARE = {"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]}


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.mark.parametrize(
    "text, kind, description",
    [
        ("tree:3", "tree", {"kind": "tree", "degree": 3}),
        ("tree:5", "tree", {"kind": "tree", "degree": 5}),
        ("tree", "tree", {"kind": "tree", "degree": 3}),
        ("example:3", "example", {"kind": "example", "order": 3}),
        ("ladder", "ladder", {"kind": "ladder"}),
    ],
)
def test_parse_instance(text, kind, description):
    instance = parse_instance(text)

    assert instance.kind == kind
    assert instance.describe() == description


@pytest.mark.parametrize("text", ["tree:x", "example:two", "nonsense", "file:/no/such/graph.json"])
def test_parse_bad_instance(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_load_finite_graph(tmp_path):
    path = write_json(tmp_path / "square.json", {**SQUARE, "basepoint": "c"})

    graph = load_finite_graph(path)

    assert len(graph) == 4
    assert graph.basepoint == "c"
    assert graph.neighbors("a") == ["b", "d"]


def test_file_instance(tmp_path):
    path = write_json(tmp_path / "square.json", SQUARE)

    instance = parse_instance(f"file:{path}")

    assert isinstance(instance, FiniteGraphInstance)
    assert instance.describe()["automorphisms"] == 8


@pytest.mark.parametrize(
    "data, error",
    [
        ({"vertices": ["a"]}, ParseError),
        ({"vertices": [], "edges": []}, InvariantViolation),
        ({"vertices": ["a", "a"], "edges": []}, InvariantViolation),
        ({"vertices": ["a", "b"], "edges": [["a", "a"]]}, InvariantViolation),
        ({"vertices": ["a", "b"], "edges": [["a", "c"]]}, InvariantViolation),
        ({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}, InvariantViolation),
        ({"vertices": ["a", "b"], "edges": [["a"]]}, ParseError),
        ({"vertices": ["a", "b"], "edges": [["a", "b"]], "basepoint": "z"}, InvariantViolation),
    ],
)
def test_invalid_graphs(data, error):
    with pytest.raises(error):
        finite_graph_from_dict(data)


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"vertices": [\n')

    with pytest.raises(ParseError):
        load_finite_graph(str(path))


@pytest.mark.parametrize(
    "data, expected",
    [
        ({"kind": "tree", "degree": 4}, TreeInstance),
        ({"kind": "example", "order": 3}, ExampleGroupInstance),
        ({"kind": "ladder"}, LadderInstance),
        ({"kind": "coset", "group": [[1, 0, 2], [0, 2, 1]], "gens": [[1, 0, 2], [0, 2, 1]]}, CosetGraphInstance),
    ],
)
def test_descriptor_files(tmp_path, data, expected):
    path = write_json(tmp_path / "instance.json", data)

    assert isinstance(parse_instance(path), expected)


def test_descriptor_resolves_relative_graph_paths(tmp_path):
    write_json(tmp_path / "square.json", SQUARE)
    path = write_json(tmp_path / "instance.json", {"kind": "file", "path": "square.json"})

    instance = parse_instance(path)

    assert instance.source == str(tmp_path / "square.json")
    assert len(instance.graph) == 4


def test_unknown_descriptor_kind(tmp_path):
    path = write_json(tmp_path / "instance.json", {"kind": "torus"})

    with pytest.raises(ParseError):
        parse_instance(path)


@pytest.mark.parametrize(
    "data, missing",
    [
        ({"kind": "coset", "gens": [[1, 0, 2]]}, "group"),
        ({"kind": "coset", "group": [[1, 0, 2]]}, "gens"),
        ({"kind": "file"}, "path"),
        ({"kind": "tree", "degree": "three"}, "integer"),
    ],
)
def test_incomplete_descriptors(tmp_path, data, missing):
    path = write_json(tmp_path / "instance.json", data)

    with pytest.raises(ParseError, match=missing):
        parse_instance(path)


def test_load_isometry(tmp_path):
    instance = parse_instance(f"file:{write_json(tmp_path / 'square.json', SQUARE)}")
    rotation = write_json(tmp_path / "rotation.json", {"map": {"a": "b", "b": "c", "c": "d", "d": "a"}, "label": "r"})
    swap = write_json(tmp_path / "swap.json", {"map": {"a": "b", "b": "a", "c": "c", "d": "d"}})

    g = load_isometry(rotation, instance)

    assert g.label == "r"
    assert g.forward("d") == "a"
    assert parse_element(instance, rotation).forward("a") == "b"
    with pytest.raises(InvariantViolation):
        load_isometry(swap, instance)


def test_tree_descriptor_elements(tree, tmp_path):
    path = write_json(tmp_path / "shift.json", {"kind": "translation", "axis_code": "01", "step": 1})

    assert parse_element(tree, path).forward("") == "0"
    assert parse_element(tree, "shift:1@01").forward("") == "0"


def test_example_group_elements_are_not_graph_isometries(example_group):
    with pytest.raises(InvariantViolation):
        isometry_from_dict({"map": {}}, example_group)


def test_build_helpers():
    assert build_tree(4).describe() == {"kind": "tree", "degree": 4}
    assert build_example_group(3).describe() == {"kind": "example", "order": 3}
    assert len(build_coset_graph([[1, 0, 2], [0, 2, 1]], [], [[1, 0, 2], [0, 2, 1]]).graph) == 6

    with pytest.raises(OrderTooSmall):
        build_example_group(1)
