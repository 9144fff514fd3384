from direction_space.instances.base import GraphInstance, Instance
from direction_space.instances.coset_graph import CosetGraphInstance
from direction_space.instances.example_group import ExampleElement, ExampleGroupInstance
from direction_space.instances.finite_graph import FiniteGraphInstance
from direction_space.instances.ladder import LadderInstance
from direction_space.instances.loader import (
    load_finite_graph,
    load_isometry,
    parse_element,
    parse_instance,
)
from direction_space.instances.tree import TreeInstance


def build_tree(degree: int) -> TreeInstance:
    return TreeInstance(degree)


def build_example_group(order: int) -> ExampleGroupInstance:
    return ExampleGroupInstance(order)


def build_coset_graph(group, subgroup, generators) -> CosetGraphInstance:
    return CosetGraphInstance(group, subgroup, generators)


__all__ = [
    "GraphInstance",
    "Instance",
    "CosetGraphInstance",
    "ExampleElement",
    "ExampleGroupInstance",
    "FiniteGraphInstance",
    "LadderInstance",
    "TreeInstance",
    "build_tree",
    "build_example_group",
    "build_coset_graph",
    "load_finite_graph",
    "load_isometry",
    "parse_element",
    "parse_instance",
]
