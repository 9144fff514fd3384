import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import torch
from einops import rearrange
from torchtyping import TensorType

from direction_space.constants import HORIZON, SEED, SLIM_TRIANGLE_SAMPLES
from direction_space.graph.exception import EmptySample, EndpointMismatch
from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.graph.metric import (
    GeodesicPath,
    distance,
    distance_to_set,
    geodesic,
    gromov_product,
    validate_geodesic,
)
from direction_space.logger import Logger
from direction_space.parallel.executor import run_grid

logger = Logger(__name__)

# NOTE: above this many sample vertices the exhaustive triangle scan is replaced by sampling
_EXHAUSTIVE_TRIANGLES = 24


@dataclass(frozen=True)
class HyperbolicityReport:
    delta_slim: Fraction
    delta_fourpoint: Fraction
    sample_spec: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta_slim": float(self.delta_slim),
            "delta_fourpoint": float(self.delta_fourpoint),
            "sample_spec": self.sample_spec,
        }


def distance_matrix(graph: GraphHandle, sample: Sequence[Vertex], horizon: int = HORIZON) -> TensorType["n", "n"]:
    def row(u: Vertex) -> List[int]:
        return [distance(graph, u, v, horizon) for v in sample]

    rows = run_grid(row, list(sample))
    return torch.tensor(rows, dtype=torch.long)


def fourpoint_delta(
    dists: TensorType["n", "n"], num_samples: Optional[int] = None, generator: Optional[torch.Generator] = None
) -> Fraction:
    """max of min{(x|z)_p, (y|z)_p} - (x|y)_p, clamped at 0.

    All products are doubled so the scan stays in integers.
    """
    n = dists.shape[0]

    if num_samples is None:
        # products[p, x, y] = 2 (x|y)_p
        products = rearrange(dists, "x p -> p x 1") + rearrange(dists, "y p -> p 1 y") - rearrange(dists, "x y -> 1 x y")
        best = 0
        for p in range(n):
            gp = products[p]
            lhs = torch.minimum(rearrange(gp, "x z -> x 1 z"), rearrange(gp, "y z -> 1 y z"))
            best = max(best, int((lhs - rearrange(gp, "x y -> x y 1")).max()))
        return Fraction(best, 2)

    quads = torch.randint(0, n, (num_samples, 4), generator=generator)
    x, y, z, p = quads.unbind(dim=-1)

    def doubled(a, b):
        return dists[a, p] + dists[b, p] - dists[a, b]

    values = torch.minimum(doubled(x, z), doubled(y, z)) - doubled(x, y)
    return Fraction(max(0, int(values.max())), 2)


def slim_delta(
    graph: GraphHandle,
    sample: Sequence[Vertex],
    horizon: int = HORIZON,
    num_triangles: Optional[int] = None,
    seed: int = SEED,
) -> Fraction:
    if len(sample) < 3:
        return Fraction(0)

    if num_triangles is None and len(sample) <= _EXHAUSTIVE_TRIANGLES:
        triangles = list(itertools.combinations(sample, 3))
    else:
        rng = random.Random(seed)
        triangles = [tuple(rng.sample(list(sample), 3)) for _ in range(num_triangles or SLIM_TRIANGLE_SAMPLES)]

    best = 0
    for a, b, c in triangles:
        sides = [geodesic(graph, a, b, horizon), geodesic(graph, b, c, horizon), geodesic(graph, c, a, horizon)]
        for i, side in enumerate(sides):
            others = [v for j, other in enumerate(sides) if j != i for v in other]
            best = max(best, max(distance_to_set(graph, x, others, horizon) for x in side))

    return Fraction(best)


def estimate_hyperbolicity(
    graph: GraphHandle,
    sample: Sequence[Vertex],
    horizon: int = HORIZON,
    num_samples: Optional[int] = None,
    num_triangles: Optional[int] = None,
    seed: int = SEED,
) -> HyperbolicityReport:
    """Exact hyperbolicity constants over a declared finite sample.

    Args:
        sample (Sequence[Vertex]): the vertices scanned
        num_samples (Optional[int]): number of random quadruples, None scans all of them
        num_triangles (Optional[int]): number of random triangles, None scans all on small samples

    Raises:
        EmptySample: `sample` is empty
    """
    sample = sorted(set(sample))
    if len(sample) == 0:
        raise EmptySample("cannot estimate hyperbolicity over an empty sample")

    dists = distance_matrix(graph, sample, horizon)
    generator = torch.Generator().manual_seed(seed)
    delta_fourpoint = fourpoint_delta(dists, num_samples=num_samples, generator=generator)
    delta_slim = slim_delta(graph, sample, horizon, num_triangles=num_triangles, seed=seed)

    quadruples = "all quadruples" if num_samples is None else f"{num_samples} quadruples, seed {seed}"
    sample_spec = f"{len(sample)} vertices, {quadruples}"
    logger.debug(f"hyperbolicity over {sample_spec}: slim={delta_slim}, fourpoint={delta_fourpoint}")

    return HyperbolicityReport(delta_slim=delta_slim, delta_fourpoint=delta_fourpoint, sample_spec=sample_spec)


def check_standard_estimate(
    graph: GraphHandle, p: Vertex, x: Vertex, y: Vertex, delta: Fraction, horizon: int = HORIZON
) -> bool:
    """d(p,γ) - 2δ <= (x|y)_p <= d(p,γ) for the tie-broken geodesic γ from x to y."""
    path = geodesic(graph, x, y, horizon)
    to_path = distance_to_set(graph, p, path.vertices, horizon)
    product = gromov_product(graph, x, y, p, horizon)
    return to_path - 2 * delta <= product <= to_path


def check_ribbon(
    graph: GraphHandle, first: GeodesicPath, second: GeodesicPath, delta: Fraction, horizon: int = HORIZON
) -> bool:
    validate_geodesic(graph, first, horizon)
    validate_geodesic(graph, second, horizon)

    bound = 8 * delta + 2 * distance(graph, first.start, second.start, horizon) + 2 * distance(
        graph, first.end, second.end, horizon
    )
    return all(distance_to_set(graph, x, second.vertices, horizon) <= bound for x in first)


def check_fellow_travel(
    graph: GraphHandle, first: GeodesicPath, second: GeodesicPath, delta: Fraction, horizon: int = HORIZON
) -> bool:
    if first.start != second.start or first.end != second.end or first.length != second.length:
        raise EndpointMismatch(
            f"paths {first.start}..{first.end} and {second.start}..{second.end} must share endpoints and length"
        )

    return all(distance(graph, a, b, horizon) <= 4 * delta for a, b in zip(first, second))


def sequence_converges_at_infinity(
    graph: GraphHandle, sequence: Sequence[Vertex], threshold: int, horizon: int = HORIZON
) -> bool:
    """Finite proxy: every pair from the second half has Gromov product >= threshold."""
    assert len(sequence) > 0, "the sequence must be nonempty"

    tail = sequence[len(sequence) // 2 :]
    basepoint = graph.basepoint
    return all(
        gromov_product(graph, u, w, basepoint, horizon) >= threshold for i, u in enumerate(tail) for w in tail[i:]
    )
