"""Cyclic colourings: the exact oracle and the two constructive pipelines."""

from __future__ import annotations

import enum
import logging
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from .edgecolor import DEFAULT_EDGE_GUARD, chromatic_index, edge_color
from .embedding import (
    PlaneGraph,
    cyclic_adjacency,
    delta_star,
    is_cycle,
    is_three_connected_simple,
    is_two_connected,
    require_valid,
)
from .exceptions import GuardExceeded, PreconditionError
from .reduction import (
    find_separating_cycle,
    reduce,
    split_along_cycle,
    subdivision_multigraph,
)

__all__ = [
    "Method",
    "CyclicColoring",
    "BudgetExceededWarning",
    "DEFAULT_GUARD",
    "verify_cyclic",
    "exact_vertex_coloring",
    "chi_c_exact",
    "greedy_cyclic_coloring",
    "color_constructive",
    "color_decomposed",
    "merge_colorings",
]

log = logging.getLogger(__name__)

DEFAULT_GUARD = 40


class Method(enum.Enum):
    EXACT = "exact"
    CONSTRUCTIVE = "constructive"
    DECOMPOSED = "decomposed"
    DIRECT = "direct"


@dataclass(frozen=True)
class CyclicColoring:
    assignment: tuple[int, ...]
    method: Method

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def to_json(self) -> dict:
        return {
            "method": self.method.value,
            "colors_used": self.colors_used,
            "assignment": {str(v): c for v, c in enumerate(self.assignment)},
        }


class BudgetExceededWarning(UserWarning):
    """A colouring needed more colours than the requested palette budget."""


def verify_cyclic(g: PlaneGraph, coloring) -> bool:
    """True iff no face holds two vertices of the same colour."""
    assignment = coloring.assignment if isinstance(coloring, CyclicColoring) else coloring
    if isinstance(assignment, Mapping):
        assignment = [assignment.get(v) for v in range(g.vertex_count)]
    if len(assignment) != g.vertex_count or any(c is None for c in assignment):
        raise PreconditionError("colouring must assign every vertex")
    for f in g.faces:
        colors = [assignment[v] for v in f.vertices]
        if len(set(colors)) != len(colors):
            return False
    return True


# ---------------------------------------------------------------------------
# Exact vertex colouring (DSATUR branch and bound on bitmasks)
# ---------------------------------------------------------------------------


def _max_clique(masks: Sequence[int]) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & masks[v])

    expand(0, (1 << len(masks)) - 1)
    return best


def _dsatur_greedy(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    color = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (x for x in range(n) if color[x] == -1),
            key=lambda x: (sat[x].bit_count(), masks[x].bit_count(), -x),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        rest = masks[v]
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            sat[w] |= 1 << c
    return color


def exact_vertex_coloring(masks: Sequence[int], lower: int = 0) -> list[int]:
    """Minimum proper colouring of the graph with adjacency bitmasks ``masks``.

    ``lower`` is a known lower bound (e.g. a clique size); the search stops
    as soon as a colouring of that size is found.
    """
    n = len(masks)
    if n == 0:
        return []
    lower = max(lower, _max_clique(masks))
    best = _dsatur_greedy(masks)
    best_k = max(best) + 1
    if best_k <= lower:
        return best

    color = [-1] * n
    sat = [0] * n

    def pick() -> int:
        chosen, key = -1, None
        for x in range(n):
            if color[x] == -1:
                k = (sat[x].bit_count(), masks[x].bit_count())
                if key is None or k > key:
                    chosen, key = x, k
        return chosen

    def search(done: int, k: int) -> bool:
        nonlocal best, best_k
        if done == n:
            best, best_k = list(color), k
            return best_k <= lower
        v = pick()
        c = 0
        while c < min(k + 1, best_k - 1):
            bit = 1 << c
            if not sat[v] & bit:
                color[v] = c
                touched = []
                rest = masks[v]
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if not sat[w] & bit:
                        sat[w] |= bit
                        touched.append(w)
                stop = search(done + 1, max(k, c + 1))
                for w in touched:
                    sat[w] &= ~bit
                color[v] = -1
                if stop:
                    return True
            c += 1
        return False

    search(0, 0)
    return best


def chi_c_exact(g: PlaneGraph, guard: int = DEFAULT_GUARD) -> tuple[int, CyclicColoring]:
    """Cyclic chromatic number with a witness colouring.

    Exact colouring of the cyclic adjacency graph; the largest face degree is
    used as the opening lower bound.

    Raises:
        GuardExceeded: more than ``guard`` vertices.
    """
    require_valid(g)
    if g.vertex_count > guard:
        raise GuardExceeded(f"{g.vertex_count} vertices exceed the exact-oracle guard {guard}")
    masks = cyclic_adjacency(g).masks()
    colors = exact_vertex_coloring(masks, delta_star(g))
    coloring = CyclicColoring(tuple(colors), Method.EXACT)
    assert verify_cyclic(g, coloring)
    return coloring.colors_used, coloring


def greedy_cyclic_coloring(g: PlaneGraph) -> CyclicColoring:
    """Largest-degree-first greedy colouring of the cyclic adjacency graph."""
    adj = cyclic_adjacency(g).adjacency
    order = sorted(range(g.vertex_count), key=lambda v: (-len(adj[v]), v))
    color = [-1] * g.vertex_count
    for v in order:
        taken = {color[w] for w in adj[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return CyclicColoring(tuple(color), Method.DIRECT)


# ---------------------------------------------------------------------------
# Constructive colouring of subdivisions
# ---------------------------------------------------------------------------


def color_constructive(
    g: PlaneGraph, guard: int = DEFAULT_GUARD, edge_guard: int = DEFAULT_EDGE_GUARD
) -> CyclicColoring:
    """Colour a subdivision of a simple 3-connected graph from two pieces.

    The branch vertices get a cyclic colouring of the reduced graph R (exact
    when R fits ``guard``, greedy otherwise).  The degree-2 vertices are the
    edges of the subdivision multigraph S; a proper edge colouring of S,
    shifted past R's palette, colours them.  Two degree-2 vertices on a
    common face are adjacent edges of S, hence differently coloured.
    """
    result = reduce(g)
    r = result.reduced
    if not is_three_connected_simple(r):
        raise PreconditionError("reduction is not a simple 3-connected graph")
    if r.vertex_count <= guard:
        _, phi = chi_c_exact(r, guard)
    else:
        phi = greedy_cyclic_coloring(r)
    offset = phi.colors_used

    links = subdivision_multigraph(g, result)
    s = links.to_multigraph()
    if len(s.edges) <= edge_guard:
        _, psi = chromatic_index(s, edge_guard)
    else:
        psi = edge_color(s)

    assignment = [-1] * g.vertex_count
    for x, v in enumerate(result.kept_vertices):
        assignment[v] = phi.assignment[x]
    for v, c in zip(links.link_vertices, psi.color):
        assignment[v] = offset + c
    coloring = CyclicColoring(tuple(assignment), Method.CONSTRUCTIVE)
    if not verify_cyclic(g, coloring):
        raise RuntimeError("constructive colouring failed verification")
    return coloring


# ---------------------------------------------------------------------------
# Decomposition along separating cycles
# ---------------------------------------------------------------------------


def merge_colorings(
    c1: Mapping[int, int], c2: Mapping[int, int], shared: Sequence[int]
) -> dict[int, int]:
    """Union of two colourings after renaming ``c2`` to agree on ``shared``.

    Colours of ``c2`` not used on ``shared`` are sent, in ascending order, to
    the smallest colours not already claimed by the shared vertices.
    """
    on1 = [c1[v] for v in shared]
    on2 = [c2[v] for v in shared]
    if len(set(on1)) != len(on1) or len(set(on2)) != len(on2):
        raise PreconditionError("shared vertices must receive distinct colours in both colourings")
    sigma = dict(zip(on2, on1))
    claimed = set(on1)
    free = (c for c in range(len(c1) + len(c2) + 1) if c not in claimed)
    for c in sorted(set(c2.values()) - set(sigma)):
        sigma[c] = next(free)
    merged = dict(c1)
    for v, c in c2.items():
        if v in merged and merged[v] != sigma[c]:
            raise RuntimeError(f"vertex {v} coloured inconsistently")
        merged[v] = sigma[c]
    return merged


def _color_piece(g: PlaneGraph, guard: int) -> CyclicColoring:
    """Colour a graph that needs no further splitting, best of what is affordable."""
    target = 3 * delta_star(g) // 2
    coloring = color_constructive(g, guard)
    if coloring.colors_used > target and g.vertex_count <= guard:
        _, coloring = chi_c_exact(g, guard)
    return coloring


def _decompose(g: PlaneGraph, guard: int) -> CyclicColoring:
    if is_cycle(g) or len(g.faces) == 3:
        # every pair of vertices shares a face
        return CyclicColoring(tuple(range(g.vertex_count)), Method.DIRECT)
    result = reduce(g)
    if is_three_connected_simple(result.reduced):
        return _color_piece(g, guard)
    cyc = find_separating_cycle(g)
    inner, outer = split_along_cycle(g, cyc)
    parts = []
    for piece in (inner, outer):
        sub = _decompose(piece.graph, guard)
        parts.append({piece.vertex_map[x]: c for x, c in enumerate(sub.assignment)})
    merged = merge_colorings(parts[0], parts[1], cyc.vertices)
    return CyclicColoring(tuple(merged[v] for v in range(g.vertex_count)), Method.DECOMPOSED)


def color_decomposed(
    g: PlaneGraph, palette_budget: int | None = None, guard: int = DEFAULT_GUARD
) -> CyclicColoring:
    """Colour a 2-connected graph by recursive splitting along short separating cycles.

    Cycles and graphs with three faces are coloured with all-distinct colours.
    Subdivisions of simple 3-connected graphs are coloured constructively,
    falling back to the exact oracle when that overshoots floor(3*Delta*/2)
    and the piece fits the guard.  Everything else is split along a
    separating cycle of length at most the largest face degree; each side is
    coloured recursively and the two colourings are matched on the cycle.

    A result above ``palette_budget`` (default floor(3*Delta*/2)) is returned
    anyway with a :class:`BudgetExceededWarning`.
    """
    require_valid(g)
    if not is_two_connected(g):
        raise PreconditionError("decomposition needs a 2-connected graph")
    if palette_budget is None:
        palette_budget = 3 * delta_star(g) // 2
    coloring = _decompose(g, guard)
    if not verify_cyclic(g, coloring):
        raise RuntimeError("decomposed colouring failed verification")
    if coloring.colors_used > palette_budget:
        msg = (
            f"colouring uses {coloring.colors_used} colours, above the budget {palette_budget} "
            f"(Delta* = {delta_star(g)}); counterexample candidate"
        )
        log.warning(msg)
        warnings.warn(msg, BudgetExceededWarning, stacklevel=2)
    return coloring
