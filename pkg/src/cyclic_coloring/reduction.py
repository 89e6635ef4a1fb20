"""Suppressing degree-2 vertices, the structure of the result, and cycle splits.

The reduction of a 2-connected graph replaces every maximal path whose
interior vertices have degree 2 by a single edge.  Rotations at the kept
vertices are inherited, so faces correspond one to one.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .embedding import (
    PlaneGraph,
    delta_star,
    edge_subgraph,
    is_cycle,
    is_three_connected_simple,
    is_two_connected,
    require_valid,
    rotation_isomorphism,
    subdivide_edges,
)
from .exceptions import PreconditionError

__all__ = [
    "ReductionResult",
    "reduce",
    "Structure",
    "StructureClass",
    "classify",
    "is_subdivision_of_simple_3_connected",
    "SubdivisionMultigraph",
    "subdivision_multigraph",
    "SeparatingCycle",
    "cycle_sides",
    "find_separating_cycle",
    "Piece",
    "split_along_cycle",
]


@dataclass(frozen=True, eq=False)
class ReductionResult:
    """The reduced graph together with its correspondences to the source.

    Attributes:
        source: the graph that was reduced.
        reduced: the reduced graph R.
        kept_vertices: ``kept_vertices[x]`` is the source vertex behind R-vertex ``x``.
        face_map: ``face_map[i]`` is the R-face matching source face ``i``.
        edge_to_path: source vertex sequence of each R-edge, read along dart ``2e``.
        dart_paths: source darts traversed by each R-dart.
    """

    source: PlaneGraph
    reduced: PlaneGraph
    kept_vertices: tuple[int, ...]
    face_map: tuple[int, ...]
    edge_to_path: tuple[tuple[int, ...], ...]
    dart_paths: tuple[tuple[int, ...], ...]

    def interior_count(self, e: int) -> int:
        """Number of degree-2 vertices on the path behind R-edge ``e``."""
        return len(self.edge_to_path[e]) - 2

    def lift(self, r_darts) -> list[int]:
        return [d for x in r_darts for d in self.dart_paths[x]]

    def regular_k(self) -> int | None:
        """Common subdivision count if every edge got the same number, else None."""
        counts = {self.interior_count(e) for e in range(self.reduced.edge_count)}
        return counts.pop() if len(counts) == 1 else None

    def resubdivide(self) -> PlaneGraph:
        return subdivide_edges(self.reduced, {e: self.interior_count(e) for e in range(self.reduced.edge_count)})

    def round_trip_isomorphism(self) -> dict[int, int] | None:
        """Rotation-preserving map from the re-subdivided graph onto the source."""
        return rotation_isomorphism(self.resubdivide(), self.source)


def reduce(g: PlaneGraph) -> ReductionResult:
    require_valid(g)
    if not is_two_connected(g):
        raise PreconditionError("reduction needs a 2-connected graph")
    if is_cycle(g):
        raise PreconditionError("a cycle has no vertex of degree at least 3")

    kept = tuple(v for v in range(g.vertex_count) if g.degree(v) >= 3)
    new_id = {v: i for i, v in enumerate(kept)}
    path_of: dict[int, tuple[int, ...]] = {}
    for v in kept:
        for d in g.rotation[v]:
            seq = [d]
            while g.degree(g.head(seq[-1])) == 2:
                seq.append(g.face_next(seq[-1]))
            path_of[d] = tuple(seq)

    edge_of: dict[int, int] = {}
    n_edges = 0
    adjacency = []
    for v in kept:
        row = []
        for d in g.rotation[v]:
            back = path_of[d][-1] ^ 1
            if back in edge_of:
                edge_of[d] = edge_of[back]
            else:
                edge_of[d] = n_edges
                n_edges += 1
            row.append((new_id[g.head(path_of[d][-1])], edge_of[d]))
        adjacency.append(row)
    r = PlaneGraph.from_adjacency(adjacency)

    dart_paths = [()] * r.dart_count
    for i, v in enumerate(kept):
        for rd, gd in zip(r.rotation[i], g.rotation[v]):
            dart_paths[rd] = path_of[gd]
    edge_to_path = []
    for e in range(r.edge_count):
        darts = dart_paths[2 * e]
        edge_to_path.append(tuple(g.origin[d] for d in darts) + (g.head(darts[-1]),))

    face_map = [-1] * len(g.faces)
    for rf in r.faces:
        face_map[g.face_of(dart_paths[rf.walk[0]][0])] = rf.index
    return ReductionResult(g, r, kept, tuple(face_map), tuple(edge_to_path), tuple(dart_paths))


def is_subdivision_of_simple_3_connected(g: PlaneGraph) -> bool:
    if not is_two_connected(g) or is_cycle(g):
        return False
    return is_three_connected_simple(reduce(g).reduced)


# ---------------------------------------------------------------------------
# Structure of the reduction
# ---------------------------------------------------------------------------


class Structure(enum.Enum):
    SIMPLE_3_CONNECTED = "simple_3_connected"
    TWO_FACE = "two_face"
    TWO_CUT = "two_cut"


@dataclass(frozen=True)
class StructureClass:
    """Classification of a reduced graph with its witness.

    For ``TWO_FACE`` and ``TWO_CUT`` the witness includes two internally
    disjoint paths of R-darts: ``path_a`` runs from ``u`` to ``v`` and
    ``path_b`` from ``v`` back to ``u``.  Together they bound a region holding
    the 2-face, or the subgraph H_R(u, v) built on the minimal component
    ``component``; the faces of R whose walks contain ``path_a[0]`` and
    ``path_b[0]`` lie on the other side.
    """

    tag: Structure
    u: int | None = None
    v: int | None = None
    component: frozenset[int] = frozenset()
    path_a: tuple[int, ...] = ()
    path_b: tuple[int, ...] = ()


def _components_without(r: PlaneGraph, removed: set[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(r.vertex_count):
        if s in removed or s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in r.neighbors[x]:
                if y not in removed and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _two_cut_witness(r: PlaneGraph) -> StructureClass | None:
    best = None
    for u, v in combinations(range(r.vertex_count), 2):
        comps = _components_without(r, {u, v})
        if len(comps) < 2:
            continue
        for comp in comps:
            key = (len(comp), u, v, min(comp))
            if best is None or key < best[0]:
                best = (key, u, v, comp)
    if best is None:
        return None
    _, u, v, comp = best
    span = comp | {u, v}
    h_edges = [
        e
        for e in range(r.edge_count)
        if set(r.endpoints(e)) <= span and set(r.endpoints(e)) != {u, v}
    ]
    h, vmap = edge_subgraph(r, h_edges)
    if not is_two_connected(h):
        raise RuntimeError(f"H_R({u},{v}) on minimal component {sorted(comp)} is not 2-connected")
    h_index = {e: i for i, e in enumerate(sorted(h_edges))}

    def to_h(d: int) -> int:
        hd = 2 * h_index[d >> 1]
        return hd if vmap[h.origin[hd]] == r.origin[d] else hd ^ 1

    def to_r(hd: int) -> int:
        d = 2 * sorted(h_edges)[hd >> 1]
        return d if r.origin[d] == vmap[h.origin[hd]] else d ^ 1

    # A dart at u leaving H into another component fixes the side of H to use.
    rot = r.rotation[u]
    outside = next(i for i, d in enumerate(rot) if r.head(d) not in span)
    h_set = set(h_edges)
    k = 1
    while (rot[(outside + k) % len(rot)] >> 1) not in h_set:
        k += 1
    start = to_h(rot[(outside + k) % len(rot)])
    walk = h.faces[h.face_of(start)].walk
    i = walk.index(start)
    walk = walk[i:] + walk[:i]
    r_walk = [to_r(d) for d in walk]
    split = next(j for j, d in enumerate(r_walk) if r.origin[d] == v)
    return StructureClass(Structure.TWO_CUT, u, v, comp, tuple(r_walk[:split]), tuple(r_walk[split:]))


def classify(result: ReductionResult) -> StructureClass:
    """First applicable structure in the order 3-connected, 2-face, 2-cut."""
    r = result.reduced
    if is_three_connected_simple(r):
        return StructureClass(Structure.SIMPLE_3_CONNECTED)
    for f in r.faces:
        if f.length == 2:
            ea, eb = f.walk
            u = r.origin[ea]
            v = r.origin[eb]
            return StructureClass(Structure.TWO_FACE, u, v, frozenset(), (eb ^ 1,), (ea ^ 1,))
    witness = _two_cut_witness(r)
    if witness is None:
        raise RuntimeError("reduced graph is neither 3-connected, nor has a 2-face or a 2-cut")
    return witness


# ---------------------------------------------------------------------------
# Subdivision multigraph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionMultigraph:
    """Faces of G as vertices, one edge per degree-2 vertex of G.

    ``links[i]`` is the pair of faces around the degree-2 vertex
    ``link_vertices[i]``.
    """

    host_faces: int
    links: tuple[tuple[int, int], ...]
    link_vertices: tuple[int, ...]

    @property
    def degrees(self) -> list[int]:
        deg = [0] * self.host_faces
        for a, b in self.links:
            deg[a] += 1
            deg[b] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def multiplicity(self) -> int:
        counts = Counter(tuple(sorted(p)) for p in self.links)
        return max(counts.values(), default=0)

    def to_multigraph(self):
        from .edgecolor import Multigraph

        return Multigraph(self.host_faces, self.links)


def subdivision_multigraph(g: PlaneGraph, result: ReductionResult | None = None) -> SubdivisionMultigraph:
    if result is None:
        result = reduce(g)
    links = []
    verts = []
    for v in range(g.vertex_count):
        if g.degree(v) != 2:
            continue
        d1, d2 = g.rotation[v]
        fa, fb = g.face_of(d1), g.face_of(d2)
        if fa == fb:
            raise PreconditionError(f"degree-2 vertex {v} sees the same face twice")
        links.append((min(fa, fb), max(fa, fb)))
        verts.append(v)
    return SubdivisionMultigraph(len(g.faces), tuple(links), tuple(verts))


# ---------------------------------------------------------------------------
# Separating cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatingCycle:
    """A cycle given by its darts, with the vertices and edges on each side.

    The inside is the side that face walks following ``darts`` lie on.
    """

    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    inside_vertices: frozenset[int]
    inside_edges: frozenset[int]
    outside_vertices: frozenset[int]
    outside_edges: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(d >> 1 for d in self.darts)

    @property
    def is_separating(self) -> bool:
        inside = self.inside_vertices or self.inside_edges
        outside = self.outside_vertices or self.outside_edges
        return bool(inside) and bool(outside)


def cycle_sides(g: PlaneGraph, darts) -> SeparatingCycle:
    """Split everything off the closed dart walk ``darts`` into its two sides."""
    darts = tuple(darts)
    verts = tuple(g.origin[d] for d in darts)
    if len(set(verts)) != len(verts):
        raise PreconditionError("dart sequence is not a simple cycle")
    for i, d in enumerate(darts):
        if g.head(d) != g.origin[darts[(i + 1) % len(darts)]]:
            raise PreconditionError("dart sequence is not closed")
    on_cycle = set(verts)
    cycle_edges = {d >> 1 for d in darts}
    inside_edges: set[int] = set()
    inside_vertices: set[int] = set()
    stack = []
    for i, d_out in enumerate(darts):
        x = g.succ(darts[i - 1] ^ 1)
        while x != d_out:
            inside_edges.add(x >> 1)
            w = g.head(x)
            if w not in on_cycle and w not in inside_vertices:
                inside_vertices.add(w)
                stack.append(w)
            x = g.succ(x)
    while stack:
        w = stack.pop()
        for d in g.rotation[w]:
            inside_edges.add(d >> 1)
            y = g.head(d)
            if y not in on_cycle and y not in inside_vertices:
                inside_vertices.add(y)
                stack.append(y)
    outside_edges = set(range(g.edge_count)) - cycle_edges - inside_edges
    outside_vertices = set(range(g.vertex_count)) - on_cycle - inside_vertices
    return SeparatingCycle(
        darts,
        verts,
        frozenset(inside_vertices),
        frozenset(inside_edges),
        frozenset(outside_vertices),
        frozenset(outside_edges),
    )


def _rest_of_face(r: PlaneGraph, path: tuple[int, ...]) -> tuple[int, ...]:
    walk = r.faces[r.face_of(path[0])].walk
    i = walk.index(path[0])
    walk = walk[i:] + walk[:i]
    if walk[: len(path)] != path:
        raise RuntimeError("face beside the witness path does not follow it")
    return walk[len(path):]


def _tie_key(g: PlaneGraph, darts: list[int]) -> tuple:
    interior = [g.head(d) for d in darts[:-1]]
    return (len(darts), min(interior, default=g.vertex_count), min(d >> 1 for d in darts))


def find_separating_cycle(g: PlaneGraph) -> SeparatingCycle:
    """Separating cycle of length at most the largest face degree.

    Applies to 2-connected graphs with at least four faces that are not
    subdivisions of simple 3-connected graphs.  The cycle is assembled from
    the witness of :func:`classify`: of the two witness paths the shorter one
    (after lifting to ``g``) is closed up by the far side of the face next to
    the longer one.
    """
    require_valid(g)
    if not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    if len(g.faces) < 4:
        raise PreconditionError(f"graph has {len(g.faces)} faces, at least 4 are needed")
    result = reduce(g)
    witness = classify(result)
    if witness.tag is Structure.SIMPLE_3_CONNECTED:
        raise PreconditionError("reduction is simple 3-connected; no separating cycle is promised")
    r = result.reduced
    lifted_a = result.lift(witness.path_a)
    lifted_b = result.lift(witness.path_b)
    rest_a = result.lift(_rest_of_face(r, witness.path_a))
    rest_b = result.lift(_rest_of_face(r, witness.path_b))
    if _tie_key(g, lifted_a) <= _tie_key(g, lifted_b):
        darts = lifted_a + [d ^ 1 for d in reversed(rest_b)]
    else:
        darts = lifted_b + [d ^ 1 for d in reversed(rest_a)]
    cyc = cycle_sides(g, darts)
    if cyc.length > delta_star(g) or not cyc.is_separating:
        raise RuntimeError(f"constructed cycle {cyc.vertices} violates the separating-cycle guarantee")
    return cyc


class Piece(NamedTuple):
    graph: PlaneGraph
    vertex_map: tuple[int, ...]


def split_along_cycle(g: PlaneGraph, cyc: SeparatingCycle) -> tuple[Piece, Piece]:
    """The cycle with its inside, and the cycle with its outside."""
    if not cyc.is_separating:
        raise PreconditionError("cycle does not separate the graph")
    pieces = []
    for side in (cyc.inside_edges, cyc.outside_edges):
        h, vmap = edge_subgraph(g, cyc.edges | side)
        require_valid(h)
        pieces.append(Piece(h, vmap))
    return pieces[0], pieces[1]
