import pytest

from direction_space.cos.handle import StabilizerTuple
from direction_space.instances.coset_graph import CosetGraphInstance, closure, invert, multiply
from direction_space.instances.exception import InvariantViolation, NotSymmetricGenerators, ParseError

S3 = [(1, 0, 2), (0, 2, 1)]
TRANSPOSITIONS = [(1, 0, 2), (0, 2, 1)]


def test_permutation_algebra():
    p = (1, 2, 0)

    assert multiply(p, invert(p)) == (0, 1, 2)
    assert len(closure(S3, 3)) == 6
    assert closure([], 3) == [(0, 1, 2)]


def test_cayley_graph_of_s3_is_a_hexagon():
    instance = CosetGraphInstance(S3, [], TRANSPOSITIONS)

    assert instance.describe() == {"kind": "coset", "order": 6, "cosets": 6, "disconnected": False}
    assert len(instance.graph.edges()) == 6
    assert all(len(instance.graph.neighbors(v)) == 2 for v in instance.graph.vertices())
    # NOTE: the action on a Cayley graph is free
    assert instance.index(StabilizerTuple(("c0",)), StabilizerTuple(("c1",))) == 1


def test_coset_graph_of_a_subgroup():
    instance = CosetGraphInstance(S3, [(1, 0, 2)], TRANSPOSITIONS)

    assert len(instance.graph) == 3
    assert len(instance.vertex_stabilizer("c0")) == 2
    assert len(instance.conjugate_subgroup("c0")) == 2
    assert instance.fixer_size(["c0"]) == 2
    assert instance.orbit_size(("c0",), ("c1",)) == 2


def test_parse_coset_elements():
    instance = CosetGraphInstance(S3, [], TRANSPOSITIONS)

    g = instance.parse_element("g:1,0,2")

    assert g.label == "g:1,0,2"
    assert g.forward(instance.coset_of((0, 1, 2))) == instance.coset_of((1, 0, 2))
    with pytest.raises(ParseError):
        instance.parse_element("g:0,0,1")
    with pytest.raises(ParseError):
        instance.parse_element("h:1,0,2")


def test_generators_must_be_symmetric():
    with pytest.raises(NotSymmetricGenerators):
        CosetGraphInstance(S3, [], [(1, 2, 0)])


def test_permutations_must_be_valid():
    with pytest.raises(InvariantViolation):
        CosetGraphInstance([(0, 0, 1)], [], [])
