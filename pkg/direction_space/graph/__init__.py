from direction_space.graph.graph import FiniteGraph, GraphHandle, Vertex
from direction_space.graph.hyperbolicity import (
    HyperbolicityReport,
    check_fellow_travel,
    check_ribbon,
    check_standard_estimate,
    estimate_hyperbolicity,
    sequence_converges_at_infinity,
)
from direction_space.graph.metric import (
    GeodesicPath,
    ball,
    distance,
    geodesic,
    gromov_product,
    hausdorff_distance,
)

__all__ = [
    "FiniteGraph",
    "GraphHandle",
    "Vertex",
    "HyperbolicityReport",
    "check_fellow_travel",
    "check_ribbon",
    "check_standard_estimate",
    "estimate_hyperbolicity",
    "sequence_converges_at_infinity",
    "GeodesicPath",
    "ball",
    "distance",
    "geodesic",
    "gromov_product",
    "hausdorff_distance",
]
