"""Constructors for the graph families used throughout the test corpus.

Vertex numbering is fixed per family so that saved graph files are stable:

* ``platonic``: vertices in the order of the coordinate table below, edges
  numbered by ascending ``(u, v)`` pair.
* ``prism``: top triangle ``0, 1, 2``, bottom triangle ``3, 4, 5``; the
  joining edges are ``i -- i+3`` with edge ids 6, 7, 8.
* ``theta(a, b, c)``: hubs 0 and 1, then the interior vertices of the paths
  of lengths ``a``, ``b``, ``c`` in that order.
* subdivisions append new vertices after the existing ones
  (see :func:`~cyclic_coloring.embedding.subdivide_edges`).
"""

from __future__ import annotations

import math
from itertools import combinations, product

import numpy as np

from .embedding import (
    PlaneGraph,
    edge_subgraph,
    require_valid,
    subdivide_edges,
)
from .exceptions import InvalidEmbedding, PreconditionError

__all__ = [
    "PLATONIC_NAMES",
    "platonic",
    "prism",
    "prism_subdiv",
    "thm6_prism",
    "theta",
    "cycle",
    "wheel",
    "regular_subdivide",
    "subdivide_edges",
    "glue_at_two_cut",
    "from_coordinates",
]

PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

_PHI = (1 + math.sqrt(5)) / 2


def _platonic_coordinates(name: str) -> np.ndarray:
    if name == "tetrahedron":
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    elif name == "cube":
        pts = list(product((-1, 1), repeat=3))
    elif name == "octahedron":
        pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    elif name == "icosahedron":
        pts = []
        for s1, s2 in product((-1, 1), repeat=2):
            pts += [(0, s1, s2 * _PHI), (s1, s2 * _PHI, 0), (s2 * _PHI, 0, s1)]
    elif name == "dodecahedron":
        pts = list(product((-1, 1), repeat=3))
        for s1, s2 in product((-1, 1), repeat=2):
            pts += [(0, s1 / _PHI, s2 * _PHI), (s1 / _PHI, s2 * _PHI, 0), (s2 * _PHI, 0, s1 / _PHI)]
    else:
        raise PreconditionError(f"unknown platonic solid {name!r}; choose from {PLATONIC_NAMES}")
    return np.asarray(pts, dtype=float)


def from_coordinates(points, edges) -> PlaneGraph:
    """Rotation system of a convex polytope skeleton centred at the origin.

    Neighbours of each vertex are sorted clockwise as seen from outside,
    starting from the smallest neighbour id.  Edge ids follow the order of
    ``edges``.
    """
    points = np.asarray(points, dtype=float)
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(len(points))}
    for e, (u, v) in enumerate(edges):
        incident[u].append((v, e))
        incident[v].append((u, e))
    adjacency = []
    for v in range(len(points)):
        normal = points[v] / np.linalg.norm(points[v])
        ref = None
        keyed = []
        for w, e in sorted(incident[v]):
            vec = points[w] - points[v]
            vec = vec - vec.dot(normal) * normal
            if ref is None:
                ref = vec / np.linalg.norm(vec)
                ortho = np.cross(normal, ref)
            # counter-clockwise angle seen from outside; negate for clockwise
            angle = math.atan2(vec.dot(ortho), vec.dot(ref))
            keyed.append(((-angle) % (2 * math.pi), w, e))
        keyed.sort()
        adjacency.append([(w, e) for _, w, e in keyed])
    g = PlaneGraph.from_adjacency(adjacency)
    require_valid(g)
    return g


def platonic(name: str) -> PlaneGraph:
    pts = _platonic_coordinates(name)
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1)
    shortest = d2[d2 > 1e-9].min()
    edges = [(u, v) for u, v in combinations(range(len(pts)), 2) if abs(d2[u, v] - shortest) < 1e-6]
    return from_coordinates(pts, edges)


def prism() -> PlaneGraph:
    """Triangular prism D3."""
    pts = []
    for z in (1.0, -1.0):
        for i in range(3):
            a = 2 * math.pi * i / 3
            pts.append((math.cos(a), math.sin(a), z))
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return from_coordinates(pts, edges)


PRISM_JOINING_EDGES = (6, 7, 8)


def thm6_prism(a: int, b: int, c: int) -> PlaneGraph:
    """Prism whose three joining edges carry ``a``, ``b``, ``c`` interior vertices."""
    for x in (a, b, c):
        if x < 0:
            raise PreconditionError("subdivision counts must be non-negative")
    return subdivide_edges(prism(), dict(zip(PRISM_JOINING_EDGES, (a, b, c))))


def prism_subdiv(t: int) -> PlaneGraph:
    """Prism with each joining edge replaced by a path of length ``t + 1``."""
    if t < 0:
        raise PreconditionError("t must be non-negative")
    return thm6_prism(t, t, t)


def theta(a: int, b: int, c: int) -> PlaneGraph:
    """Two hubs joined by internally disjoint paths of lengths ``a``, ``b``, ``c``.

    Length-1 paths are single edges, so ``theta(1, 1, c)`` has a double edge and
    ``theta(1, 1, 1)`` is a triple edge.
    """
    if min(a, b, c) < 1:
        raise PreconditionError("theta path lengths must be at least 1")
    adjacency: list[list[tuple[int, int]]] = [[], []]
    hub_u: list[tuple[int, int]] = []
    hub_v: list[tuple[int, int]] = []
    next_edge = 0
    for length in (a, b, c):
        chain = [0] + [len(adjacency) + i for i in range(length - 1)] + [1]
        adjacency.extend([] for _ in range(length - 1))
        ids = list(range(next_edge, next_edge + length))
        next_edge += length
        hub_u.append((chain[1], ids[0]))
        hub_v.append((chain[-2], ids[-1]))
        for i in range(1, length):
            adjacency[chain[i]] = [(chain[i - 1], ids[i - 1]), (chain[i + 1], ids[i])]
    adjacency[0] = hub_u
    adjacency[1] = hub_v[::-1]
    return PlaneGraph.from_adjacency(adjacency)


def wheel(n: int) -> PlaneGraph:
    """Hub 0 joined to a rim cycle ``1..n`` (spokes are edges ``0..n-1``)."""
    if n < 3:
        raise PreconditionError("a wheel needs at least 3 rim vertices")
    spoke = {i: i - 1 for i in range(1, n + 1)}
    rim = {i: n + i - 1 for i in range(1, n + 1)}  # rim edge i -- i+1
    adjacency = [[(i, spoke[i]) for i in range(n, 0, -1)]]
    for i in range(1, n + 1):
        nxt = i % n + 1
        prv = (i - 2) % n + 1
        adjacency.append([(0, spoke[i]), (nxt, rim[i]), (prv, rim[prv])])
    return PlaneGraph.from_adjacency(adjacency)


def cycle(n: int) -> PlaneGraph:
    if n < 2:
        raise PreconditionError("a cycle needs at least 2 vertices")
    return PlaneGraph.from_adjacency([[((v - 1) % n, (v - 1) % n), ((v + 1) % n, v)] for v in range(n)])


def regular_subdivide(g: PlaneGraph, k: int) -> PlaneGraph:
    """Replace every edge by a path of length ``k + 1``."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    return subdivide_edges(g, {e: k for e in range(g.edge_count)})


def _corner_dart(g: PlaneGraph, face_index: int, v: int) -> int:
    walk = g.faces[face_index].walk
    hits = [d for d in walk if g.origin[d] == v]
    if len(hits) != 1:
        raise PreconditionError(f"vertex {v} must appear exactly once on face {face_index}")
    return hits[0]


def _shared_face(g: PlaneGraph, u: int, v: int, face: int | None) -> int:
    if face is not None:
        if not {u, v} <= g.faces[face].vertices:
            raise PreconditionError(f"face {face} does not contain both {u} and {v}")
        return face
    for f in g.faces:
        if u in f.vertices and v in f.vertices:
            return f.index
    raise PreconditionError(f"vertices {u} and {v} share no face")


def glue_at_two_cut(
    g1: PlaneGraph,
    g2: PlaneGraph,
    u1: int,
    v1: int,
    u2: int,
    v2: int,
    *,
    face1: int | None = None,
    face2: int | None = None,
) -> PlaneGraph:
    """Identify ``u1 = u2`` and ``v1 = v2``, drawing ``g2`` inside a face of ``g1``.

    ``g2`` is placed inside ``face1`` of ``g1`` (default: the first face holding
    both ``u1`` and ``v1``), with its own ``face2`` turned outwards.  Vertices of
    ``g1`` keep their ids; the other vertices of ``g2`` follow in ascending
    order.  Edges of ``g1`` keep their ids and edges of ``g2`` follow.
    """
    if u1 == v1 or u2 == v2:
        raise InvalidEmbedding("identification would create a loop")
    f1 = _shared_face(g1, u1, v1, face1)
    f2 = _shared_face(g2, u2, v2, face2)
    vmap2 = {u2: u1, v2: v1}
    nxt = g1.vertex_count
    for w in range(g2.vertex_count):
        if w not in vmap2:
            vmap2[w] = nxt
            nxt += 1
    m1 = g1.edge_count
    adjacency = [list(row) for row in g1.adjacency()] + [[] for _ in range(nxt - g1.vertex_count)]
    row2 = g2.adjacency()
    for w in range(g2.vertex_count):
        if w not in (u2, v2):
            adjacency[vmap2[w]] = [(vmap2[x], e + m1) for x, e in row2[w]]
    for a1, a2 in ((u1, u2), (v1, v2)):
        d1 = _corner_dart(g1, f1, a1)
        d2 = _corner_dart(g2, f2, a2)
        rot2 = list(g2.rotation[a2])
        i2 = rot2.index(d2)
        block = [(vmap2[g2.head(d)], (d >> 1) + m1) for d in rot2[i2:] + rot2[:i2]]
        i1 = g1.rotation[a1].index(d1)
        adjacency[a1] = adjacency[a1][:i1] + block + adjacency[a1][i1:]
    g = PlaneGraph.from_adjacency(adjacency)
    require_valid(g)
    return g


def remove_parallel_copy(g: PlaneGraph, u: int, v: int) -> PlaneGraph:
    """Delete the highest-id edge among parallel ``u``--``v`` edges."""
    from .embedding import delete_edge

    parallel = [e for e in range(g.edge_count) if set(g.endpoints(e)) == {u, v}]
    if len(parallel) < 2:
        raise PreconditionError(f"no parallel edges between {u} and {v}")
    return delete_edge(g, parallel[-1])
