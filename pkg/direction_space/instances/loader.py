import json
import os
from typing import Any, Dict

from direction_space.graph.graph import FiniteGraph
from direction_space.instances.base import GraphInstance, Instance
from direction_space.instances.coset_graph import CosetGraphInstance
from direction_space.instances.example_group import ExampleGroupInstance
from direction_space.instances.exception import InvariantViolation, ParseError
from direction_space.instances.finite_graph import FiniteGraphInstance
from direction_space.instances.ladder import LadderInstance
from direction_space.instances.tree import TreeInstance
from direction_space.isometry.isometry import Isometry


def _read_json(path: str) -> Any:
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.msg)
    except OSError as e:
        raise ParseError(0, f"cannot read {path}: {e.strerror}")


def finite_graph_from_dict(data: Dict[str, Any]) -> FiniteGraph:
    """Validate `{"vertices": [...], "edges": [[a, b], ...]}` into a graph."""
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError(1, "a graph needs a 'vertices' list and an 'edges' list")

    vertices = [str(v) for v in data["vertices"]]
    if len(vertices) == 0:
        raise InvariantViolation("a graph needs at least one vertex")

    seen_vertices = set()
    for v in vertices:
        if v in seen_vertices:
            raise InvariantViolation(f"duplicate vertex {v!r}")
        seen_vertices.add(v)

    seen_edges = set()
    edges = []
    for edge in data["edges"]:
        if not isinstance(edge, list) or len(edge) != 2:
            raise ParseError(1, f"an edge must be a pair, got {edge!r}")

        a, b = str(edge[0]), str(edge[1])
        if a == b:
            raise InvariantViolation(f"self-loop at vertex {a!r}")
        for v in (a, b):
            if v not in seen_vertices:
                raise InvariantViolation(f"edge ({a!r}, {b!r}) names the unknown vertex {v!r}")

        key = tuple(sorted((a, b)))
        if key in seen_edges:
            raise InvariantViolation(f"duplicate edge ({a!r}, {b!r})")
        seen_edges.add(key)
        edges.append(key)

    basepoint = data.get("basepoint")
    if basepoint is not None and basepoint not in seen_vertices:
        raise InvariantViolation(f"basepoint {basepoint!r} is not a vertex")

    return FiniteGraph.from_edges(vertices, edges, basepoint=basepoint)


def load_finite_graph(path: str) -> FiniteGraph:
    """
    Raises:
        ParseError: the file is not valid JSON of the graph format
        InvariantViolation: duplicate vertices or edges, self-loops, unknown endpoints
    """
    return finite_graph_from_dict(_read_json(path))


def _field(data: Dict[str, Any], key: str) -> Any:
    if key not in data:
        raise ParseError(1, f"a {data['kind']!r} descriptor needs a {key!r} field")
    return data[key]


def instance_from_dict(data: Dict[str, Any], origin: str = "") -> Instance:
    kind = data.get("kind") if isinstance(data, dict) else None

    try:
        if kind == "tree":
            return TreeInstance(int(data.get("degree", 3)))
        if kind == "example":
            return ExampleGroupInstance(int(data.get("order", 2)))
    except (TypeError, ValueError):
        raise ParseError(1, f"a {kind!r} descriptor needs an integer parameter")

    if kind == "ladder":
        return LadderInstance()
    if kind == "coset":
        return CosetGraphInstance(_field(data, "group"), data.get("subgroup", []), _field(data, "gens"))
    if kind == "file":
        path = _field(data, "path")
        if origin != "" and not os.path.isabs(path):
            path = os.path.join(os.path.dirname(origin), path)
        return FiniteGraphInstance(load_finite_graph(path), source=path)

    raise ParseError(1, f"unknown instance kind {kind!r}")


def parse_instance(text: str) -> Instance:
    """Read `tree:3`, `example:2`, `ladder`, `file:graph.json` or a descriptor file."""
    kind, _, argument = text.partition(":")
    try:
        if kind == "tree":
            return TreeInstance(int(argument or 3))
        if kind == "example":
            return ExampleGroupInstance(int(argument or 2))
    except ValueError:
        raise ParseError(1, f"bad instance {text!r}, expected an integer parameter")

    if text == "ladder":
        return LadderInstance()
    if kind == "file":
        return FiniteGraphInstance(load_finite_graph(argument), source=argument)
    if os.path.isfile(text):
        return instance_from_dict(_read_json(text), origin=text)

    raise ParseError(1, f"unknown instance {text!r}")


def isometry_from_dict(data: Dict[str, Any], instance: Instance) -> Isometry:
    if not isinstance(instance, GraphInstance):
        raise InvariantViolation(f"{instance.kind} elements are not graph isometries")

    if "map" in data:
        mapping = {str(k): str(v) for k, v in data["map"].items()}
        return instance.load_permutation(mapping, label=data.get("label", "permutation"))
    if isinstance(instance, TreeInstance):
        return instance.load_descriptor(data)

    raise InvariantViolation(f"cannot read an isometry of {instance.kind} from {sorted(data)}")


def load_isometry(path: str, instance: Instance) -> Isometry:
    """
    Raises:
        ParseError: the file is not valid JSON
        InvariantViolation: the map is not an adjacency-preserving bijection
    """
    return isometry_from_dict(_read_json(path), instance)


def parse_element(instance: Instance, text: str) -> Any:
    if text.endswith(".json") and os.path.isfile(text):
        return load_isometry(text, instance)
    return instance.parse_element(text)
