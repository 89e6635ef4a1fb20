"""The fixed instance corpus used by the sweep and the acceptance tests."""

from __future__ import annotations

import random

from .edgecolor import Multigraph
from .embedding import PlaneGraph
from .generators import (
    PLATONIC_NAMES,
    cycle,
    glue_at_two_cut,
    platonic,
    prism,
    prism_subdiv,
    regular_subdivide,
    remove_parallel_copy,
    subdivide_edges,
    theta,
    thm6_prism,
    wheel,
)
from .reduction import is_subdivision_of_simple_3_connected, subdivision_multigraph

__all__ = ["glued_instances", "standard_corpus", "multigraph_corpus"]


def _quad_diagonal(g: PlaneGraph) -> tuple[int, int, int]:
    """A largest face and two opposite vertices on it."""
    face = max(g.faces, key=lambda f: (f.degree, -f.index))
    return face.index, face.vertex_walk[0], face.vertex_walk[face.degree // 2]


def _edge_face(g: PlaneGraph, e: int) -> tuple[int, int, int]:
    u, v = g.endpoints(e)
    return g.face_of(2 * e), u, v


def glued_instances() -> dict[str, PlaneGraph]:
    """2-connected graphs with a 2-cut or a 2-face in their reduction."""
    p = prism()
    fp, a, b = _quad_diagonal(p)
    out = {"glue_prism_prism_diag": glue_at_two_cut(p, p, a, b, a, b, face1=fp, face2=fp)}

    fe, u, v = _edge_face(p, 6)
    doubled = glue_at_two_cut(p, p, u, v, u, v, face1=fe, face2=fe)
    out["glue_prism_prism_edge"] = remove_parallel_copy(doubled, u, v)

    th = theta(2, 2, 2)
    out["glue_prism_theta"] = glue_at_two_cut(p, th, a, b, 0, 1, face1=fp, face2=0)

    c = platonic("cube")
    fc, ca, cb = _quad_diagonal(c)
    out["glue_cube_cube_diag"] = glue_at_two_cut(c, c, ca, cb, ca, cb, face1=fc, face2=fc)

    ps = prism_subdiv(1)
    fs, sa, sb = _quad_diagonal(ps)
    out["glue_prismsub1_prism"] = glue_at_two_cut(ps, p, sa, sb, a, b, face1=fs, face2=fp)

    o = platonic("octahedron")
    fo, ou, ov = _edge_face(o, 0)
    out["glue_octa_octa_edge"] = glue_at_two_cut(o, o, ou, ov, ou, ov, face1=fo, face2=fo)

    dbl = out["glue_prism_prism_diag"]
    fd, da, db = _quad_diagonal(dbl)
    out["glue_triple_prism_cube"] = glue_at_two_cut(dbl, c, da, db, ca, cb, face1=fd, face2=fc)
    return out


def standard_corpus() -> dict[str, PlaneGraph]:
    """About forty instances covering every bound's hypothesis space.

    Every instance has at most 40 vertices, so the exact oracle applies.
    """
    corpus: dict[str, PlaneGraph] = {}
    for name in PLATONIC_NAMES:
        corpus[name] = platonic(name)
    corpus["prism"] = prism()
    for n in (5, 7, 28):
        corpus[f"wheel_{n}"] = wheel(n)
    for n in (5, 6):
        corpus[f"cycle_{n}"] = cycle(n)
    for abc in ((1, 1, 3), (1, 2, 2), (2, 2, 2), (2, 3, 4), (3, 3, 3), (4, 4, 4)):
        corpus["theta_%d_%d_%d" % abc] = theta(*abc)
    for t in range(4):
        corpus[f"prism_subdiv_{t}"] = prism_subdiv(t)
    for abc in ((1, 2, 3), (2, 2, 2), (3, 3, 3), (1, 1, 4), (0, 2, 5)):
        corpus["thm6_prism_%d_%d_%d" % abc] = thm6_prism(*abc)
    for base, k in (("tetrahedron", 1), ("tetrahedron", 3), ("cube", 1), ("cube", 2), ("octahedron", 1),
                    ("octahedron", 2)):
        corpus[f"regular_{base}_{k}"] = regular_subdivide(platonic(base), k)
    corpus["regular_prism_2"] = regular_subdivide(prism(), 2)
    corpus["cube_one_edge_2"] = subdivide_edges(platonic("cube"), {0: 2})
    corpus["octahedron_mixed"] = subdivide_edges(platonic("octahedron"), {0: 1, 3: 2, 7: 1, 11: 2})
    corpus["dodecahedron_one_edge"] = subdivide_edges(platonic("dodecahedron"), {0: 1})
    corpus["dodecahedron_three_edges"] = subdivide_edges(platonic("dodecahedron"), {0: 1, 9: 1, 20: 3})
    corpus["icosahedron_two_edges"] = subdivide_edges(platonic("icosahedron"), {0: 1, 5: 2})
    corpus.update(glued_instances())
    return corpus


_SEEDS = (*PLATONIC_NAMES, "prism", "wheel_4", "wheel_6")


def _seed_graph(name: str) -> PlaneGraph:
    if name == "prism":
        return prism()
    if name.startswith("wheel_"):
        return wheel(int(name.split("_")[1]))
    return platonic(name)


def multigraph_corpus(count: int = 200, seed: int = 0) -> list[tuple[str, Multigraph]]:
    """Subdivision multigraphs of the corpus plus random subdivisions of the seeds."""
    out = []
    for name, g in standard_corpus().items():
        if is_subdivision_of_simple_3_connected(g):
            out.append((name, subdivision_multigraph(g).to_multigraph()))
    rng = random.Random(seed)
    i = 0
    while len(out) < count:
        base = _SEEDS[i % len(_SEEDS)]
        g = _seed_graph(base)
        plan = {e: rng.choice((0, 0, 1, 2, 3)) for e in range(g.edge_count)}
        out.append((f"random_{base}_{i}", subdivision_multigraph(subdivide_edges(g, plan)).to_multigraph()))
        i += 1
    return out[:count]
