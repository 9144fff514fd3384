import pytest

from direction_space.cos.exception import IncompatibleInstances
from direction_space.cos.handle import Algebraic, StabilizerTuple
from direction_space.directions.ray import Ray, ray_base


def test_ray_terms(example_group):
    a = example_group.parse_element("a")

    ray = Ray(example_group, a, Algebraic("U", (0, 0)))

    assert ray[0] == Algebraic("U", (0, 0))
    assert ray.term(3) == Algebraic("U", (-3, 3))
    assert ray.terms(2) == [Algebraic("U", (0, 0)), Algebraic("U", (-1, 1)), Algebraic("U", (-2, 2))]


def test_ray_in_a_tree(tree):
    g = tree.parse_element("shift:1@01")

    ray = Ray(tree, g, StabilizerTuple(("",)))

    assert [t.vertices for t in ray.terms(3)] == [("",), ("0",), ("01",), ("010",)]
    with pytest.raises(AssertionError):
        ray.term(-1)


def test_ray_base_must_belong_to_the_instance(tree):
    with pytest.raises(IncompatibleInstances):
        Ray(tree, tree.parse_element("shift:1@01"), Algebraic("U", (0, 0)))


def test_ray_bases(tree, example_group, small_profile):
    assert ray_base(tree, tree.parse_element("shift:1@01"), small_profile) == StabilizerTuple(("",))
    assert ray_base(tree, tree.parse_element("rotate:120@"), small_profile) == StabilizerTuple(("",))
    assert ray_base(example_group, example_group.parse_element("a^2"), small_profile) == Algebraic("U", (0, 0))
