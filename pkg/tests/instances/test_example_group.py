import itertools

import pytest

from direction_space.cos.exception import IncompatibleInstances
from direction_space.cos.handle import Algebraic, StabilizerTuple, TidyBelow
from direction_space.instances.example_group import ExampleGroupInstance
from direction_space.instances.exception import OrderTooSmall, ParseError


def U(a: int, b: int) -> Algebraic:
    return Algebraic(family="U", params=(a, b))


def test_order_must_be_at_least_two():
    with pytest.raises(OrderTooSmall):
        ExampleGroupInstance(1)


@pytest.mark.parametrize(
    "text, label",
    [
        ("a", "a^1"),
        ("a^-1", "a^-1"),
        ("a-inverse", "a^-1"),
        ("identity", "identity"),
        ("f:0=1|;a^2", "f:0=1|;a^2"),
        ("f:-1=1|3=1;a^3", "f:-1=1|3=1;a^3"),
        ("f:0=3|;a", "f:0=1|;a^1"),
        ("f:0=2|", "identity"),
    ],
)
def test_parse_and_label(example_group, text, label):
    assert example_group.parse_element(text).label == label


@pytest.mark.parametrize("text", ["b", "f:x=1|;a", "f:0=1|;b^2", "f:0=1|;a^"])
def test_parse_bad_elements(example_group, text):
    with pytest.raises(ParseError):
        example_group.parse_element(text)


def test_group_law(example_group):
    a = example_group.parse_element("a")
    x = example_group.parse_element("f:0=1|;a^0")
    y = example_group.parse_element("f:0=1|;a^2")

    assert a.compose(x).label == "f:-1=1|;a^1"
    assert y.inverse().label == "f:2=1|;a^-2"
    assert y.compose(y.inverse()).label == "identity"
    assert a.power(3).label == "a^3"
    assert a.power(-2).label == "a^-2"
    assert example_group.parse_element("a*a*a^-2").label == "identity"


def test_index_and_action(example_group):
    a = example_group.parse_element("a")

    assert example_group.index(U(2, 0), U(0, 0)) == 4
    assert example_group.index(U(0, 0), U(2, 0)) == 1
    assert example_group.index(U(1, 3), U(-1, 0)) == 2**5
    assert example_group.act(a, U(0, 0)) == U(-1, 1)
    assert example_group.act(a.inverse(), U(0, 0)) == U(1, -1)
    assert example_group.is_subgroup(U(0, 0), U(1, 1)) is True
    assert example_group.is_subgroup(U(2, 0), U(1, 1)) is False


def test_index_matches_brute_force_counting(example_group):
    handles = [U(a, b) for a, b in itertools.product(range(-2, 3), repeat=2)]

    for first, second in itertools.product(handles, repeat=2):
        assert example_group.index(first, second) == example_group.brute_force_index(first, second)


def test_closed_form_scale_and_tidiness(example_group):
    element = example_group.parse_element("f:0=1|;a^-3")

    assert example_group.closed_form_scale(element) == 8
    assert example_group.tidy_above(element, U(0, 0), depth=3) is True
    assert example_group.tidy_below(element, U(0, 0)) is TidyBelow.TIDY


def test_only_product_handles_belong_to_the_example_group(example_group):
    with pytest.raises(IncompatibleInstances):
        example_group.index(StabilizerTuple(("",)), U(0, 0))
    with pytest.raises(IncompatibleInstances):
        example_group.validate_handle(Algebraic(family="V", params=(0, 0)))
