import pytest

from direction_space.cos.exception import IncompatibleInstances
from direction_space.cos.handle import Algebraic, StabilizerTuple, parse_handle


@pytest.mark.parametrize(
    "text, expected",
    [
        ('{"stabilizer": ["0", ""]}', StabilizerTuple(("", "0"))),
        ("stab:01,0", StabilizerTuple(("0", "01"))),
        ('{"algebraic": {"family": "U", "params": [1, -2]}}', Algebraic("U", (1, -2))),
        ('{"algebraic": {"family": "U", "params": {"a": 0, "b": 3}}}', Algebraic("U", (0, 3))),
        ("U:2,5", Algebraic("U", (2, 5))),
    ],
)
def test_parse_handle(text, expected):
    assert parse_handle(text) == expected


@pytest.mark.parametrize("text", ['{"stabilizer": ', '{"subgroup": []}', "U:1,x", "nothing"])
def test_parse_bad_handle(text):
    with pytest.raises(IncompatibleInstances):
        parse_handle(text)


def test_stabilizer_tuples_are_sorted_sets():
    assert StabilizerTuple.of(["1", "0", "1"]).vertices == ("0", "1")
    assert StabilizerTuple.of(["0"]).to_dict() == {"stabilizer": ["0"]}

    with pytest.raises(AssertionError):
        StabilizerTuple(("1", "0"))
    with pytest.raises(AssertionError):
        StabilizerTuple(())


def test_algebraic_to_dict():
    assert Algebraic("U", (1, 2)).to_dict() == {"algebraic": {"family": "U", "params": [1, 2]}}
