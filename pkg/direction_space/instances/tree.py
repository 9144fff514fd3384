import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Tuple

from direction_space.constants import BALL_AUTOMORPHISM_LIMIT, ORACLE_HULL_LIMIT, TREE_ALPHABET
from direction_space.cos.exception import DepthInfeasible, OracleHorizonExceeded
from direction_space.cos.handle import COSHandle
from direction_space.graph.graph import GraphHandle, Vertex
from direction_space.instances.base import GraphInstance
from direction_space.instances.exception import ArityTooSmall, InvariantViolation, ParseError
from direction_space.isometry.isometry import Isometry
from direction_space.logger import Logger

logger = Logger(__name__)

# NOTE: `shift:s` without an axis code translates along ...0101...
DEFAULT_AXIS_CODE = "01"


def _common_prefix(u: str, v: str) -> int:
    n = 0
    for a, b in zip(u, v):
        if a != b:
            break
        n += 1
    return n


def multiply(u: str, w: str) -> str:
    """The reduced product u·w in the free product of copies of Z/2."""
    n = 0
    while n < min(len(u), len(w)) and u[len(u) - 1 - n] == w[n]:
        n += 1
    return u[: len(u) - n] + w[n:]


def tree_path(u: str, v: str) -> List[str]:
    n = _common_prefix(u, v)
    up = [u[:i] for i in range(len(u), n - 1, -1)]
    down = [v[:i] for i in range(n + 1, len(v) + 1)]
    return up + down


class TreeGraph(GraphHandle):
    """The (q+1)-regular tree on reduced words, the root being the empty word."""

    def __init__(self, degree: int):
        if degree < 3:
            raise ArityTooSmall(f"a regular tree needs degree at least 3, got {degree}")
        assert degree <= len(TREE_ALPHABET), f"degree must be at most {len(TREE_ALPHABET)}, got {degree}"

        self.degree = degree
        self.alphabet = TREE_ALPHABET[:degree]

    @property
    def basepoint(self) -> Vertex:
        return Vertex("")

    def has_vertex(self, vertex: str) -> bool:
        if any(a not in self.alphabet for a in vertex):
            return False
        return all(a != b for a, b in zip(vertex, vertex[1:]))

    @lru_cache(maxsize=65536)
    def neighbors(self, vertex: Vertex) -> List[Vertex]:
        return sorted(vertex[:-1] if vertex.endswith(a) else vertex + a for a in self.alphabet)

    def closed_form_distance(self, u: Vertex, v: Vertex) -> Optional[int]:
        return len(u) + len(v) - 2 * _common_prefix(u, v)

    def is_edge(self, u: Vertex, v: Vertex) -> bool:
        return abs(len(u) - len(v)) == 1 and (u.startswith(v) or v.startswith(u))

    def ball_size(self, radius: int) -> int:
        q = self.degree - 1
        return 1 + sum(self.degree * q ** (d - 1) for d in range(1, radius + 1))


@dataclass(frozen=True)
class Portrait:
    """A root-fixing automorphism: a root permutation and local corrections.

    Letter i of the output is P(a_i), where P starts as `root` and is composed
    on the right with the correction at every prefix a_1..a_i found in `corrections`.
    Each correction fixes the last letter of its prefix.
    """

    root: Dict[str, str]
    corrections: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def apply(self, word: str) -> str:
        local = dict(self.root)
        out = []
        for i, a in enumerate(word):
            out.append(local[a])
            correction = self.corrections.get(word[: i + 1])
            if correction is not None:
                local = {b: local[correction[b]] for b in local}
        return "".join(out)

    def invert(self, word: str) -> str:
        local = dict(self.root)
        source = []
        for b in word:
            inverse = {image: a for a, image in local.items()}
            source.append(inverse[b])
            correction = self.corrections.get("".join(source))
            if correction is not None:
                local = {a: local[correction[a]] for a in local}
        return "".join(source)

    @property
    def is_pure(self) -> bool:
        return len(self.corrections) == 0


class TreeIsometry(Isometry):
    """w ↦ g·τ(w) for a reduced word g and a root-fixing portrait τ."""

    def __init__(self, word: str, portrait: Portrait, label: str):
        super().__init__(label)
        self.word = word
        self.portrait = portrait

    def forward(self, vertex: Vertex) -> Vertex:
        return Vertex(multiply(self.word, self.portrait.apply(vertex)))

    def backward(self, vertex: Vertex) -> Vertex:
        return Vertex(self.portrait.invert(multiply(self.word[::-1], vertex)))


def _permutation_count(f: int, k: int) -> int:
    return math.perm(f, k) if k <= f else 0


class TreeInstance(GraphInstance):
    """The full automorphism group of a regular tree, with closed-form orbit counting."""

    kind = "tree"

    def __init__(self, degree: int):
        super().__init__(TreeGraph(degree))
        self.tree: TreeGraph = self.graph

    @property
    def index_constant(self) -> Fraction:
        return Fraction(self.tree.degree, self.tree.degree - 1)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "degree": self.tree.degree}

    # ==================================================
    #               Elements
    # ==================================================

    def _permutation(self, images: str) -> Dict[str, str]:
        alphabet = self.tree.alphabet
        if sorted(images) != sorted(alphabet):
            raise InvariantViolation(f"{images!r} is not a permutation of {alphabet!r}")
        return dict(zip(alphabet, images))

    def _check_word(self, word: str):
        if not self.tree.has_vertex(word):
            raise InvariantViolation(f"{word!r} is not a reduced word over {self.tree.alphabet!r}")

    def translation(self, axis_code: str, step: int) -> TreeIsometry:
        """Shift by `step` along the periodic axis through the root spelled by `axis_code`."""
        period = len(axis_code)
        self._check_word(axis_code)
        if period < 2 or axis_code[0] == axis_code[-1]:
            raise InvariantViolation(f"axis code {axis_code!r} must be cyclically reduced")
        if step < 1:
            raise InvariantViolation(f"step must be positive, got {step}")

        word = "".join(axis_code[i % period] for i in range(step))
        mapping: Dict[str, str] = {}
        for i in range(period):
            a, b = axis_code[i], axis_code[(i + step) % period]
            if mapping.setdefault(a, b) != b:
                raise InvariantViolation(f"shifting {axis_code!r} by {step} sends {a} to both {mapping[a]} and {b}")
        if len(set(mapping.values())) != len(mapping):
            raise InvariantViolation(f"shifting {axis_code!r} by {step} is not a letter permutation")

        # NOTE: letters off the axis are paired in sorted order
        free_sources = sorted(a for a in self.tree.alphabet if a not in mapping)
        free_targets = sorted(a for a in self.tree.alphabet if a not in mapping.values())
        mapping.update(zip(free_sources, free_targets))

        return TreeIsometry(word, Portrait(root=mapping), label=f"shift:{step}@{axis_code}")

    def rotation(self, fixed: str, images: str) -> TreeIsometry:
        """The rotation about `fixed` acting on its neighbours by the letter permutation `images`."""
        self._check_word(fixed)
        mapping = self._permutation(images)
        portrait = Portrait(root=mapping)
        word = multiply(fixed, portrait.apply(fixed[::-1]))
        return TreeIsometry(word, portrait, label=f"rotate:{images}@{fixed}")

    def twist(self, table: Dict[str, str]) -> TreeIsometry:
        """A root-fixing automorphism from a prefix table; the empty prefix is the root permutation."""
        root = self._permutation(table.get("", self.tree.alphabet))
        corrections = {}
        for prefix, images in sorted(table.items()):
            if prefix == "":
                continue
            self._check_word(prefix)
            correction = self._permutation(images)
            if correction[prefix[-1]] != prefix[-1]:
                raise InvariantViolation(f"the correction at {prefix!r} must fix the letter {prefix[-1]}")
            corrections[prefix] = correction

        label = "twist:" + ",".join(f"{prefix}={images}" for prefix, images in sorted(table.items()))
        return TreeIsometry("", Portrait(root=root, corrections=corrections), label=label)

    def parse_atom(self, token: str) -> Isometry:
        if token == "identity":
            return self.identity()

        kind, _, body = token.partition(":")
        try:
            if kind == "shift":
                step, _, axis_code = body.partition("@")
                return self.translation(axis_code or DEFAULT_AXIS_CODE, int(step))
            if kind == "rotate":
                images, _, fixed = body.partition("@")
                return self.rotation(fixed, images)
            if kind == "twist":
                return self.twist(dict(entry.split("=", 1) for entry in body.split(",")))
        except (ValueError, InvariantViolation) as e:
            raise ParseError(1, f"bad tree element {token!r}: {e}")

        raise ParseError(1, f"unknown tree element {token!r}")

    def load_descriptor(self, data: Dict[str, Any]) -> Isometry:
        kind = data.get("kind")
        if kind == "translation":
            return self.translation(str(data["axis_code"]), int(data["step"]))
        if kind == "rotation":
            images = data["local_perm"]
            if isinstance(images, list):
                images = "".join(self.tree.alphabet[i] for i in images)
            return self.rotation(str(data["fixed"]), images)
        if kind == "twist":
            return self.twist({str(k): str(v) for k, v in data["portrait"].items()})
        raise InvariantViolation(f"unknown tree isometry kind {kind!r}")

    # ==================================================
    #               Orbit Oracle
    # ==================================================

    def hull(self, vertices: Iterable[Vertex]) -> List[Vertex]:
        vertices = list(vertices)
        hull = set()
        for v in vertices:
            hull.update(tree_path(vertices[0], v))
        return sorted(hull)

    def orbit_size(self, fixed: Tuple[Vertex, ...], moved: Tuple[Vertex, ...]) -> int:
        """Counts the embeddings of hull(A ∪ B) that fix hull(A).

        Each vertex p of the larger hull contributes a falling factorial
        f(p)^(k(p)), where k(p) counts the children of p hanging off hull(A)
        and f(p) the free directions at p.
        """
        inner = set(self.hull(fixed))
        outer = self.hull(fixed + moved)
        if len(outer) > ORACLE_HULL_LIMIT:
            raise OracleHorizonExceeded(f"the hull has {len(outer)} vertices, more than {ORACLE_HULL_LIMIT}")

        members = set(outer)
        depth = {v: 0 for v in inner}
        queue = deque(sorted(inner))
        count = 1
        while queue:
            p = queue.popleft()
            children = [w for w in self.tree.neighbors(p) if w in members and w not in depth]
            for w in children:
                depth[w] = depth[p] + 1
                queue.append(w)

            if p in inner:
                free = self.tree.degree - sum(1 for w in self.tree.neighbors(p) if w in inner)
            else:
                free = self.tree.degree - 1
            count *= _permutation_count(free, len(children))

        return count

    # ==================================================
    #               Ball Automorphisms
    # ==================================================

    def ball_automorphism_count(self, radius: int) -> int:
        if radius == 0:
            return 1
        internal = self.tree.ball_size(radius - 1) - 1
        return math.factorial(self.tree.degree) * math.factorial(self.tree.degree - 1) ** internal

    def ball_automorphisms(self, centre: Vertex, radius: int) -> List[Dict[Vertex, Vertex]]:
        """Every automorphism of the radius ball around `centre`, as vertex maps.

        Raises:
            DepthInfeasible: there are more than BALL_AUTOMORPHISM_LIMIT of them
        """
        size = self.ball_automorphism_count(radius)
        if size > BALL_AUTOMORPHISM_LIMIT:
            raise DepthInfeasible(f"the radius {radius} ball has {size} automorphisms, more than {BALL_AUTOMORPHISM_LIMIT}")

        parent: Dict[Vertex, Optional[Vertex]] = {centre: None}
        order = [centre]
        for x in order:
            if self.tree.closed_form_distance(centre, x) == radius:
                continue
            for w in self.tree.neighbors(x):
                if w not in parent:
                    parent[w] = x
                    order.append(w)

        def children(x: Vertex, up: Optional[Vertex]) -> List[Vertex]:
            return [w for w in self.tree.neighbors(x) if w != up]

        maps = [{centre: centre}]
        for x in order:
            if self.tree.closed_form_distance(centre, x) == radius:
                continue
            extended = []
            for m in maps:
                sources = children(x, parent[x])
                targets = children(m[x], None if parent[x] is None else m[parent[x]])
                for images in itertools.permutations(targets):
                    image = dict(m)
                    image.update(zip(sources, images))
                    extended.append(image)
            maps = extended

        logger.debug(f"enumerated {len(maps)} automorphisms of the radius {radius} ball at {centre!r}")
        return maps

    def brute_force_orbit_size(
        self,
        fixed: Tuple[Vertex, ...],
        moved: Tuple[Vertex, ...],
        centre: Vertex,
        radius: int,
        automorphisms: Optional[List[Dict[Vertex, Vertex]]] = None,
    ) -> int:
        """|G_A · B| counted over the ball automorphisms; A ∪ B must lie in the ball and contain `centre`.

        Pass `automorphisms` to reuse one enumeration across many counts.
        """
        if automorphisms is None:
            automorphisms = self.ball_automorphisms(centre, radius)
        return len({tuple(m[v] for v in moved) for m in automorphisms if all(m[v] == v for v in fixed)})

    def tidy_above(self, element: Isometry, handle: COSHandle, depth: int) -> bool:
        """Factorisation U = U₊U₋ in the automorphism group of the `depth` ball around the first vertex of U."""
        self.validate_handle(handle)
        centre = handle.vertices[0]
        automorphisms = self.ball_automorphisms(centre, depth)
        inside = set(automorphisms[0])

        def fixer(vertices: Iterable[Vertex]) -> int:
            pinned = [v for v in self.hull([centre, *vertices]) if v in inside]
            return sum(1 for m in automorphisms if all(m[v] == v for v in pinned))

        ahead, behind = self.translates(element, handle.vertices, depth)
        return fixer(handle.vertices) * fixer(ahead | behind) == fixer(ahead) * fixer(behind)
