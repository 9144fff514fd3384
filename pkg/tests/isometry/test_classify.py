import pytest

from direction_space.isometry.classify import (
    IsometryKind,
    classify,
    require_hyperbolic,
    translation_length,
)
from direction_space.isometry.exception import NotHyperbolic
from direction_space.instances.ladder import LadderInstance
from direction_space.graph.generators import cycle_graph
from direction_space.isometry.isometry import PermutationIsometry
from direction_space.profile import TruncationProfile


def test_a_translation_is_hyperbolic(tree, small_profile):
    g = tree.parse_element("shift:1@01")

    isometry_class = classify(tree.graph, g, small_profile)

    assert isometry_class.kind is IsometryKind.HYPERBOLIC
    assert isometry_class.is_hyperbolic
    assert isometry_class.witness.vertex == ""
    assert isometry_class.witness.displacement == 1
    assert isometry_class.witness.power == 1
    assert isometry_class.to_dict()["kind"] == "Hyperbolic"


def test_a_rotation_is_elliptic(tree, small_profile):
    r = tree.parse_element("rotate:120@")

    isometry_class = classify(tree.graph, r, small_profile)

    assert isometry_class.is_elliptic
    assert isometry_class.witness.orbit == ("",)
    assert isometry_class.witness.diameter == 0
    with pytest.raises(NotHyperbolic):
        require_hyperbolic(tree.graph, r, small_profile)


@pytest.mark.parametrize("step", [1, 2, 3])
def test_translation_length(tree, small_profile, step):
    g = tree.translation("01" if step % 2 == 0 else "012", step)
    assert translation_length(tree.graph, g, small_profile) == step


def test_ladder_shifts_and_flips(small_profile):
    ladder = LadderInstance()

    assert classify(ladder.graph, ladder.parse_element("shift:1"), small_profile).is_hyperbolic
    assert classify(ladder.graph, ladder.parse_element("flip"), small_profile).is_elliptic


def test_undetermined_inside_a_small_window():
    # NOTE: the orbit of a rotation of C8 needs 8 steps to close
    PROFILE = TruncationProfile(horizon=2, power_bound=5)
    graph = cycle_graph(8)
    r = PermutationIsometry({str(i): str((i + 1) % 8) for i in range(8)})

    isometry_class = classify(graph, r, PROFILE)

    assert isometry_class.kind is IsometryKind.UNDETERMINED
    assert isometry_class.witness is None
    assert "power 5" in isometry_class.diagnostics
