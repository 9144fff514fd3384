from typing import Any, List

from direction_space.cos.handle import COSHandle, StabilizerTuple
from direction_space.instances.base import GraphInstance, Instance
from direction_space.isometry.axis import find_axis
from direction_space.isometry.classify import classify
from direction_space.profile import TruncationProfile


def ray_base(instance: Instance, element: Any, profile: TruncationProfile) -> COSHandle:
    """The stabiliser of an axis vertex, the basepoint when the axis passes through it.

    Elliptic elements and algebraic instances use the instance's default base.
    """
    if isinstance(instance, GraphInstance) and classify(instance.graph, element, profile).is_hyperbolic:
        vertices = find_axis(instance.graph, element, profile).vertices
        basepoint = instance.graph.basepoint
        if basepoint in vertices:
            return StabilizerTuple((basepoint,))
        return StabilizerTuple((vertices[len(vertices) // 2],))
    return instance.default_base(element, profile)


class Ray:
    """The ray n ↦ αⁿ(U), materialised on demand.

    Terms are cached, so read them from one thread or call `terms` before fanning out.
    """

    def __init__(self, instance: Instance, element: Any, base: COSHandle):
        instance.validate_handle(base)
        self.instance = instance
        self.element = element
        self.base = base
        self._terms: List[COSHandle] = [base]

    def term(self, n: int) -> COSHandle:
        assert n >= 0, f"ray terms are indexed from 0, got {n}"
        while len(self._terms) <= n:
            self._terms.append(self.instance.act(self.element, self._terms[-1]))
        return self._terms[n]

    def terms(self, count: int) -> List[COSHandle]:
        """term(0), ..., term(count)."""
        self.term(count)
        return self._terms[: count + 1]

    def __getitem__(self, n: int) -> COSHandle:
        return self.term(n)
