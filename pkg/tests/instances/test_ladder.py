import pytest

from direction_space.cos.scale import scale_estimate
from direction_space.directions.report import moves_towards_infinity
from direction_space.instances.exception import InvariantViolation, ParseError
from direction_space.instances.ladder import LadderInstance


@pytest.fixture
def ladder():
    return LadderInstance()


def test_ladder_graph(ladder):
    graph = ladder.graph

    assert graph.basepoint == "0:0"
    assert graph.neighbors("0:0") == ["-1:0", "0:1", "1:0"]
    assert graph.closed_form_distance("0:0", "3:1") == 4
    assert graph.has_vertex("-2:1")
    assert not graph.has_vertex("0:2")
    assert not graph.has_vertex("01:0")
    assert not graph.has_vertex("x")


@pytest.mark.parametrize(
    "text, vertex, image",
    [
        ("shift:2", "0:0", "2:0"),
        ("glide:1", "0:0", "1:1"),
        ("reflect:0", "3:1", "-3:1"),
        ("flip", "0:0", "0:1"),
        ("affine:-1,2,1", "1:0", "1:1"),
    ],
)
def test_ladder_elements(ladder, text, vertex, image):
    g = ladder.parse_element(text)

    assert g.forward(vertex) == image
    assert g.backward(image) == vertex


def test_ladder_group_law(ladder):
    g = ladder.parse_element("glide:3")

    assert g.compose(g.inverse()).forward("5:1") == "5:1"
    assert ladder.parse_element("glide:1*glide:1").forward("0:0") == "2:0"


@pytest.mark.parametrize("text, error", [("affine:2,0,0", InvariantViolation), ("shift:x", ParseError), ("turn", ParseError)])
def test_bad_ladder_elements(ladder, text, error):
    with pytest.raises(error):
        ladder.parse_element(text)


def test_ladder_stabilisers(ladder):
    assert ladder.orbit_size(("0:0",), ("1:0",)) == 2
    assert ladder.orbit_size(("0:0", "1:0"), ("2:0",)) == 1
    assert ladder.fixer_size(("0:0", "0:1")) == 2


def test_ladder_elements_are_uniscalar(ladder, small_profile):
    shift = ladder.parse_element("shift:1")

    assert scale_estimate(ladder, shift, small_profile).value == 1
    assert moves_towards_infinity(ladder, shift, small_profile) is False
