"""Plane multigraphs as rotation systems.

A plane graph is stored as a set of darts (half-edges).  Edge ``e`` owns the
darts ``2e`` and ``2e + 1``, so the twin of a dart is ``d ^ 1``.  Each vertex
carries the clockwise cyclic order of its outgoing darts.  Faces are the
orbits of ``d -> succ(twin(d))`` where ``succ`` is the rotation successor.

All graphs are built through :meth:`PlaneGraph.from_adjacency`, which assigns
dart ``2e`` to the first occurrence of edge ``e`` when the vertices are
scanned in ascending id order.  This keeps dart numbering canonical, so that
writing a graph to text and parsing it back yields an identical object.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .exceptions import InvalidEmbedding, PreconditionError

__all__ = [
    "Dart",
    "Face",
    "PlaneGraph",
    "CyclicAdjacencyGraph",
    "ValidationReport",
    "validate",
    "require_valid",
    "trace_faces",
    "delta_star",
    "delta",
    "small_delta",
    "k_star",
    "t_of",
    "is_cycle",
    "cyclic_adjacency",
    "is_connected",
    "is_simple",
    "is_two_connected",
    "is_three_connected_simple",
    "is_locally_connected",
    "faces_ge4_pairwise_disjoint",
    "edge_subgraph",
    "delete_edge",
    "subdivide_edges",
    "rotation_isomorphism",
]


class Dart(NamedTuple):
    id: int
    origin: int
    twin: int
    edge: int


@dataclass(frozen=True)
class Face:
    """One face of a plane graph, given by its boundary walk.

    ``degree`` counts distinct vertices on the walk; ``length`` counts darts.
    The two agree unless a vertex repeats on the walk, which only happens in
    graphs with a cut vertex.
    """

    index: int
    walk: tuple[int, ...]
    vertex_walk: tuple[int, ...]
    vertices: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.walk)


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Connected plane multigraph given by a clockwise rotation system.

    Use :meth:`from_adjacency` rather than the raw constructor.  The
    constructor only checks that the dart structure is consistent; loops,
    disconnection and non-planar rotations are accepted here and reported by
    :func:`validate`.
    """

    origin: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]
    _position: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        n_darts = len(self.origin)
        if n_darts % 2:
            raise InvalidEmbedding("odd number of darts")
        position = [-1] * n_darts
        for v, darts in enumerate(self.rotation):
            for i, d in enumerate(darts):
                if not 0 <= d < n_darts:
                    raise InvalidEmbedding(f"dart {d} out of range at vertex {v}")
                if position[d] != -1:
                    raise InvalidEmbedding(f"dart {d} listed twice")
                if self.origin[d] != v:
                    raise InvalidEmbedding(f"dart {d} listed at {v} but has origin {self.origin[d]}")
                position[d] = i
        missing = [d for d, p in enumerate(position) if p == -1]
        if missing:
            raise InvalidEmbedding(f"darts {missing} are not in any rotation")
        object.__setattr__(self, "_position", tuple(position))

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[tuple[int, int]]]) -> "PlaneGraph":
        """Build a graph from per-vertex clockwise lists of ``(neighbor, edge_id)``.

        Every edge id must occur exactly twice and ids must be dense from 0.
        The neighbor given on each side must be the other endpoint.
        """
        occurrences: dict[int, list[tuple[int, int]]] = {}
        for v, entries in enumerate(adjacency):
            for nbr, e in entries:
                occurrences.setdefault(e, []).append((v, nbr))
        m = len(occurrences)
        if sorted(occurrences) != list(range(m)):
            raise InvalidEmbedding(f"edge ids must be 0..{m - 1}, got {sorted(occurrences)}")
        n = len(adjacency)
        for e, occ in occurrences.items():
            if len(occ) != 2:
                raise InvalidEmbedding(f"edge {e} appears {len(occ)} times, expected 2")
            (a, a_nbr), (b, b_nbr) = occ
            if a_nbr != b or b_nbr != a:
                raise InvalidEmbedding(f"edge {e}: endpoints {a},{b} disagree with listed neighbors")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidEmbedding(f"edge {e} references a missing vertex")
        origin = [-1] * (2 * m)
        seen: set[int] = set()
        rotation = []
        for v, entries in enumerate(adjacency):
            darts = []
            for _, e in entries:
                d = 2 * e if e not in seen else 2 * e + 1
                seen.add(e)
                origin[d] = v
                darts.append(d)
            rotation.append(tuple(darts))
        return cls(tuple(origin), tuple(rotation))

    # -- basic structure -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.origin) // 2

    @property
    def dart_count(self) -> int:
        return len(self.origin)

    def dart(self, d: int) -> Dart:
        return Dart(d, self.origin[d], d ^ 1, d >> 1)

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def head(self, d: int) -> int:
        return self.origin[d ^ 1]

    def succ(self, d: int) -> int:
        """Next dart clockwise around the origin of ``d``."""
        rot = self.rotation[self.origin[d]]
        return rot[(self._position[d] + 1) % len(rot)]

    def pred(self, d: int) -> int:
        rot = self.rotation[self.origin[d]]
        return rot[(self._position[d] - 1) % len(rot)]

    def face_next(self, d: int) -> int:
        return self.succ(d ^ 1)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Inverse of :meth:`from_adjacency`."""
        return [[(self.head(d), d >> 1) for d in darts] for darts in self.rotation]

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.head(d) for d in darts) for darts in self.rotation)

    # -- faces -----------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        face_of = [-1] * self.dart_count
        faces = []
        for start in range(self.dart_count):
            if face_of[start] != -1:
                continue
            walk = []
            d = start
            while face_of[d] == -1:
                face_of[d] = len(faces)
                walk.append(d)
                d = self.face_next(d)
            vwalk = tuple(self.origin[x] for x in walk)
            faces.append(Face(len(faces), tuple(walk), vwalk, frozenset(vwalk)))
        object.__setattr__(self, "_face_of", tuple(face_of))
        return tuple(faces)

    def face_of(self, d: int) -> int:
        """Index of the face whose walk contains dart ``d``."""
        self.faces
        return self._face_of[d]

    def __repr__(self):
        return f"PlaneGraph(V={self.vertex_count}, E={self.edge_count})"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]
    face_count: int

    def __bool__(self):
        return self.ok


def validate(g: PlaneGraph) -> ValidationReport:
    """Check twin involution, looplessness, connectivity and Euler's formula."""
    problems = []
    for d in range(g.dart_count):
        t = d ^ 1
        if t == d or (t ^ 1) != d or (d >> 1) != (t >> 1):
            problems.append(f"dart {d}: twin is not an involution")
    for e in range(g.edge_count):
        a, b = g.endpoints(e)
        if a == b:
            problems.append(f"edge {e} is a loop at vertex {a}")
    if g.vertex_count < 1:
        problems.append("graph has no vertices")
    elif not is_connected(g):
        problems.append("graph is not connected")
    n_faces = len(g.faces)
    euler = g.vertex_count - g.edge_count + n_faces
    if euler != 2:
        problems.append(
            f"Euler characteristic V - E + F = {g.vertex_count} - {g.edge_count} + {n_faces} = {euler}, expected 2"
        )
    return ValidationReport(not problems, tuple(problems), n_faces)


def require_valid(g: PlaneGraph) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidEmbedding("; ".join(report.violations))


# ---------------------------------------------------------------------------
# Scalar parameters
# ---------------------------------------------------------------------------


def trace_faces(g: PlaneGraph) -> tuple[Face, ...]:
    require_valid(g)
    return g.faces


def delta_star(g: PlaneGraph) -> int:
    """Maximum face degree (distinct vertices on the face)."""
    return max(f.degree for f in g.faces)


def delta(g: PlaneGraph) -> int:
    return max(g.degree(v) for v in range(g.vertex_count))


def small_delta(g: PlaneGraph) -> int:
    return min(g.degree(v) for v in range(g.vertex_count))


def k_star(g: PlaneGraph) -> int:
    """Largest number of vertices shared by two distinct faces."""
    faces = g.faces
    if len(faces) < 2:
        raise PreconditionError("k* needs at least two faces")
    return max(len(f1.vertices & f2.vertices) for f1, f2 in combinations(faces, 2))


def is_cycle(g: PlaneGraph) -> bool:
    return g.vertex_count >= 2 and all(g.degree(v) == 2 for v in range(g.vertex_count)) and is_connected(g)


def t_of(g: PlaneGraph) -> int:
    """Number of vertices on a longest path made only of degree-2 vertices.

    Raises:
        PreconditionError: if ``g`` is a cycle, where the quantity is undefined.
    """
    if is_cycle(g):
        raise PreconditionError("t(G) is undefined on a cycle")
    two = {v for v in range(g.vertex_count) if g.degree(v) == 2}
    best = 0
    seen: set[int] = set()
    for s in sorted(two):
        if s in seen:
            continue
        size = 0
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            size += 1
            for w in g.neighbors[v]:
                if w in two and w not in seen:
                    seen.add(w)
                    stack.append(w)
        best = max(best, size)
    return best


@dataclass(frozen=True)
class CyclicAdjacencyGraph:
    """Simple graph joining two vertices iff they share a face."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def masks(self) -> list[int]:
        return [sum(1 << w for w in nb) for nb in self.adjacency]

    def is_complete(self) -> bool:
        return all(len(nb) == self.n - 1 for nb in self.adjacency)


def cyclic_adjacency(g: PlaneGraph) -> CyclicAdjacencyGraph:
    adj: list[set[int]] = [set() for _ in range(g.vertex_count)]
    for f in g.faces:
        for v in f.vertices:
            adj[v].update(f.vertices)
    for v, nb in enumerate(adj):
        nb.discard(v)
    return CyclicAdjacencyGraph(g.vertex_count, tuple(frozenset(nb) for nb in adj))


# ---------------------------------------------------------------------------
# Connectivity predicates
# ---------------------------------------------------------------------------


def _connected_without(neighbors: Sequence[Iterable[int]], removed: frozenset[int] | set[int]) -> bool:
    rest = [v for v in range(len(neighbors)) if v not in removed]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in neighbors[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def is_connected(g: PlaneGraph) -> bool:
    return _connected_without(g.neighbors, frozenset())


def is_simple(g: PlaneGraph) -> bool:
    pairs = set()
    for e in range(g.edge_count):
        a, b = g.endpoints(e)
        if a == b:
            return False
        key = (min(a, b), max(a, b))
        if key in pairs:
            return False
        pairs.add(key)
    return True


def is_two_connected(g: PlaneGraph) -> bool:
    """2-connectivity for loopless multigraphs.

    Two vertices joined by at least two parallel edges count as 2-connected.
    """
    n = g.vertex_count
    if n < 2 or not is_connected(g):
        return False
    if n == 2:
        return g.edge_count >= 2
    return all(_connected_without(g.neighbors, {v}) for v in range(n))


def is_three_connected_simple(g: PlaneGraph) -> bool:
    """True iff ``g`` is simple and 3-connected (multigraphs give False)."""
    n = g.vertex_count
    if n < 4 or not is_simple(g) or not is_connected(g):
        return False
    for v in range(n):
        if not _connected_without(g.neighbors, {v}):
            return False
    return all(_connected_without(g.neighbors, {u, v}) for u, v in combinations(range(n), 2))


def is_locally_connected(g: PlaneGraph) -> bool:
    """Every vertex neighbourhood induces a connected subgraph."""
    nbrs = g.neighbors
    for v in range(g.vertex_count):
        hood = nbrs[v]
        if not hood:
            continue
        start = min(hood)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x] & hood:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != hood:
            return False
    return True


def faces_ge4_pairwise_disjoint(g: PlaneGraph) -> bool:
    big = [f.vertices for f in g.faces if f.degree >= 4]
    return all(not (a & b) for a, b in combinations(big, 2))


# ---------------------------------------------------------------------------
# Structural edits.  All results are rebuilt through from_adjacency.
# ---------------------------------------------------------------------------


def edge_subgraph(g: PlaneGraph, edges: Iterable[int]) -> tuple[PlaneGraph, tuple[int, ...]]:
    """Subgraph on the given edges with inherited rotations.

    Returns the subgraph and the map from its vertex ids to ids of ``g``.
    Vertices and edges are renumbered in ascending order of their old ids.
    """
    keep = sorted(set(edges))
    new_edge = {e: i for i, e in enumerate(keep)}
    verts = sorted({v for e in keep for v in g.endpoints(e)})
    new_vertex = {v: i for i, v in enumerate(verts)}
    adjacency = []
    for v in verts:
        adjacency.append(
            [(new_vertex[g.head(d)], new_edge[d >> 1]) for d in g.rotation[v] if (d >> 1) in new_edge]
        )
    return PlaneGraph.from_adjacency(adjacency), tuple(verts)


def delete_edge(g: PlaneGraph, e: int) -> PlaneGraph:
    """Remove edge ``e``; higher edge ids shift down by one.  Vertices are kept."""
    adjacency = []
    for darts in g.rotation:
        row = []
        for d in darts:
            x = d >> 1
            if x == e:
                continue
            row.append((g.head(d), x - 1 if x > e else x))
        adjacency.append(row)
    return PlaneGraph.from_adjacency(adjacency)


def subdivide_edges(g: PlaneGraph, plan: Mapping[int, int]) -> PlaneGraph:
    """Replace edge ``e`` by a path with ``plan[e]`` new degree-2 vertices.

    New vertices get ids ``V, V+1, ...`` in ascending edge order, listed along
    the path from the origin of dart ``2e``.  The first segment keeps id ``e``;
    further segments get fresh ids after the existing edges.
    """
    n, m = g.vertex_count, g.edge_count
    for e, k in plan.items():
        if not 0 <= e < m:
            raise PreconditionError(f"plan names unknown edge {e}")
        if k < 0:
            raise PreconditionError(f"negative subdivision count for edge {e}")
    first_vertex = {}
    first_edge = {}
    nv, ne = n, m
    for e in range(m):
        k = plan.get(e, 0)
        first_vertex[e] = nv
        first_edge[e] = ne
        nv += k
        ne += k

    def segment(e: int, i: int) -> int:
        return e if i == 0 else first_edge[e] + i - 1

    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for v in range(n):
        for d in g.rotation[v]:
            e = d >> 1
            k = plan.get(e, 0)
            if k == 0:
                adjacency[v].append((g.head(d), e))
            elif d == 2 * e:
                adjacency[v].append((first_vertex[e], e))
            else:
                adjacency[v].append((first_vertex[e] + k - 1, segment(e, k)))
    for e in range(m):
        k = plan.get(e, 0)
        a, b = g.endpoints(e)
        chain = [a] + [first_vertex[e] + i for i in range(k)] + [b]
        for i in range(1, k + 1):
            w = chain[i]
            adjacency[w] = [(chain[i - 1], segment(e, i - 1)), (chain[i + 1], segment(e, i))]
    return PlaneGraph.from_adjacency(adjacency)


def rotation_isomorphism(g1: PlaneGraph, g2: PlaneGraph) -> dict[int, int] | None:
    """Orientation-preserving isomorphism of connected rotation systems.

    Returns a vertex map ``g1 -> g2`` that carries darts to darts while
    commuting with twin and rotation successor, or None if none exists.
    """
    if (g1.vertex_count, g1.edge_count) != (g2.vertex_count, g2.edge_count):
        return None
    if g1.dart_count == 0:
        return {0: 0} if g1.vertex_count == g2.vertex_count == 1 else None
    anchor = min(range(g1.dart_count), key=lambda d: (-g1.degree(g1.origin[d]), d))
    for image in range(g2.dart_count):
        if g2.degree(g2.origin[image]) != g1.degree(g1.origin[anchor]):
            continue
        dmap = {anchor: image}
        used = {image}
        queue = deque([anchor])
        ok = True
        while queue and ok:
            d = queue.popleft()
            x = dmap[d]
            for nd, nx in ((d ^ 1, x ^ 1), (g1.succ(d), g2.succ(x))):
                if nd in dmap:
                    if dmap[nd] != nx:
                        ok = False
                        break
                elif nx in used:
                    ok = False
                    break
                else:
                    dmap[nd] = nx
                    used.add(nx)
                    queue.append(nd)
        if ok and len(dmap) == g1.dart_count:
            return {g1.origin[d]: g2.origin[x] for d, x in dmap.items()}
    return None
