import math
from fractions import Fraction

import pytest

from direction_space.directions.delta import Verdict, delta_plus, delta_pseudometric, max_exponent, row_value, verdict
from direction_space.directions.exception import NotTowardsInfinity
from direction_space.instances.ladder import LadderInstance


@pytest.mark.parametrize(
    "value, n, scale, expected",
    [(8, 3, 2, Fraction(1)), (8, 2, 2, Fraction(3, 2)), (1, 5, 4, Fraction(0)), (3, 1, 2, math.log2(3))],
)
def test_row_value(value, n, scale, expected):
    assert row_value(value, n, scale) == pytest.approx(expected)
    assert isinstance(row_value(value, n, scale), type(expected))


@pytest.mark.parametrize(
    "delta, slack, expected",
    [
        (Fraction(0), 0.1, Verdict.SAME_CLASS),
        (0.2, 0.1, Verdict.SAME_CLASS),
        (Fraction(2), 0.1, Verdict.DISTINCT),
        (1.85, 0.1, Verdict.DISTINCT),
        (1, 0.1, Verdict.INCONCLUSIVE),
    ],
)
def test_verdict(delta, slack, expected):
    assert verdict(delta, slack) is expected


def test_opposite_directions_are_at_distance_two(example_group, small_profile):
    a = example_group.parse_element("a")

    report = delta_pseudometric(example_group, a, example_group.inverse(a), small_profile)

    assert report.delta == Fraction(2)
    assert isinstance(report.delta, Fraction)
    assert report.slack == pytest.approx(1 / 6)
    assert report.verdict is Verdict.DISTINCT
    for row in report.forward.rows:
        assert (row.k, row.index, row.value) == (0, 2**row.n, Fraction(1))


def test_powers_share_a_direction(example_group, small_profile):
    a = example_group.parse_element("a")

    report = delta_pseudometric(example_group, a, example_group.power(a, 2), small_profile)

    assert report.forward.headline == Fraction(1, 7)
    assert report.backward.headline == 0
    assert report.verdict is Verdict.SAME_CLASS
    assert report.to_dict()["verdict"] == "same-class"


def test_exponents_reach_the_admissible_bound(example_group, profile):
    a = example_group.parse_element("a")
    square = example_group.power(a, 2)

    table = delta_plus(example_group, square, a, profile)

    assert table.row(profile.power_bound).k == 2 * profile.power_bound > profile.exponent_bound
    assert all(row.value == 0 for row in table.rows)
    assert table.headline == 0

    report = delta_pseudometric(example_group, a, square, profile)

    assert report.forward.headline == Fraction(1, 21)
    assert report.delta <= 2 * report.slack
    assert report.verdict is Verdict.SAME_CLASS


@pytest.mark.parametrize(
    "first_scale, second_scale, n, expected",
    [(4, 2, 40, 80), (2, 4, 7, 3), (2, 2, 5, 5), (2, 3, 3, 1), (8.0, 2.0, 2, 6)],
)
def test_max_exponent(first_scale, second_scale, n, expected):
    assert max_exponent(first_scale, second_scale, n) == expected


def test_tree_directions(tree, small_profile):
    g = tree.parse_element("shift:1@01")

    table = delta_plus(tree, g, tree.inverse(g), small_profile)

    for row in table.rows:
        assert row.k == 0
        assert row.index == 3 * 2 ** (row.n - 1)
        assert row.value == pytest.approx((math.log(3) + (row.n - 1) * math.log(2)) / (row.n * math.log(2)))
    assert table.headline == pytest.approx(1 + (math.log2(3) - 1) / 6)
    assert delta_pseudometric(tree, g, tree.inverse(g), small_profile).verdict is Verdict.DISTINCT


def test_rows_parallel_match_serial(example_group, small_profile):
    a = example_group.parse_element("a")
    b = example_group.parse_element("f:0=1|;a^2")

    serial = delta_pseudometric(example_group, a, b, small_profile, num_workers=1)
    parallel = delta_pseudometric(example_group, a, b, small_profile, num_workers=4)

    assert serial.to_dict() == parallel.to_dict()


def test_delta_needs_elements_towards_infinity(tree, small_profile):
    ladder = LadderInstance()

    with pytest.raises(NotTowardsInfinity):
        delta_pseudometric(tree, tree.parse_element("rotate:120@"), tree.parse_element("shift:1@01"), small_profile)
    with pytest.raises(NotTowardsInfinity):
        delta_plus(ladder, ladder.parse_element("shift:1"), ladder.parse_element("glide:1"), small_profile)
