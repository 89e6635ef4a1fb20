"""Proper edge colouring of loopless multigraphs by bounded backtracking.

Shannon's bound floor(3*Delta/2) and the Vizing--Gupta bound Delta + mu both
guarantee that a colouring exists within ``default_budget``, so the search
below is total at that budget.  Lower budgets are allowed for exact
chromatic-index queries; an exhausted search raises :class:`InfeasibleBudget`.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .exceptions import GuardExceeded, InfeasibleBudget, PreconditionError

__all__ = [
    "Multigraph",
    "EdgeColoring",
    "default_budget",
    "edge_color",
    "chromatic_index",
    "is_proper",
    "density_lower_bound",
]

DEFAULT_EDGE_GUARD = 40


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        for a, b in self.edges:
            if a == b:
                raise PreconditionError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise PreconditionError(f"edge ({a},{b}) out of range")

    @property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def multiplicity(self) -> int:
        counts = Counter((min(a, b), max(a, b)) for a, b in self.edges)
        return max(counts.values(), default=0)


@dataclass(frozen=True)
class EdgeColoring:
    color: tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return len(set(self.color))


def default_budget(m: Multigraph) -> int:
    big_delta = m.max_degree
    return min(3 * big_delta // 2, big_delta + m.multiplicity)


def is_proper(m: Multigraph, color) -> bool:
    seen = set()
    for (a, b), c in zip(m.edges, color):
        for x in (a, b):
            if (x, c) in seen:
                return False
            seen.add((x, c))
    return len(color) == len(m.edges)


def density_lower_bound(m: Multigraph) -> int:
    """max(Delta, largest edge count spanned by three vertices).

    Any three vertices span a subgraph whose edges pairwise meet, so they
    all need distinct colours.
    """
    best = m.max_degree
    if m.n >= 3 and m.edges:
        pair = Counter((min(a, b), max(a, b)) for a, b in m.edges)
        touched = sorted({x for e in pair for x in e})
        for x, y, z in combinations(touched, 3):
            best = max(best, pair[(x, y)] + pair[(x, z)] + pair[(y, z)])
    return best


def edge_color(m: Multigraph, budget: int | None = None) -> EdgeColoring:
    """Proper edge colouring with at most ``budget`` colours.

    Edges are branched on in order of decreasing endpoint-degree sum; at each
    edge the used colours are tried in ascending order, then one fresh colour.

    Raises:
        InfeasibleBudget: no colouring with ``budget`` colours exists.
    """
    if budget is None:
        budget = default_budget(m)
    if not m.edges:
        return EdgeColoring(())
    if budget < m.max_degree:
        raise InfeasibleBudget(f"budget {budget} is below the maximum degree {m.max_degree}")

    deg = m.degrees
    order = sorted(range(len(m.edges)), key=lambda i: (-(deg[m.edges[i][0]] + deg[m.edges[i][1]]), i))
    ends = [m.edges[i] for i in order]
    used = [0] * m.n
    remaining = list(deg)
    color = [-1] * len(ends)

    def room(x: int) -> bool:
        return remaining[x] <= budget - used[x].bit_count()

    def search(pos: int, n_colors: int) -> bool:
        if pos == len(ends):
            return True
        a, b = ends[pos]
        busy = used[a] | used[b]
        remaining[a] -= 1
        remaining[b] -= 1
        for c in range(min(n_colors + 1, budget)):
            bit = 1 << c
            if busy & bit:
                continue
            used[a] |= bit
            used[b] |= bit
            if room(a) and room(b) and search(pos + 1, max(n_colors, c + 1)):
                color[pos] = c
                return True
            used[a] &= ~bit
            used[b] &= ~bit
        remaining[a] += 1
        remaining[b] += 1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(ends) + 100))
    try:
        found = search(0, 0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        raise InfeasibleBudget(f"no proper edge colouring with {budget} colours")
    out = [0] * len(ends)
    for pos, i in enumerate(order):
        out[i] = color[pos]
    return EdgeColoring(tuple(out))


def chromatic_index(m: Multigraph, guard: int = DEFAULT_EDGE_GUARD) -> tuple[int, EdgeColoring]:
    """Exact chromatic index with a witness colouring.

    Budgets are tried upward from :func:`density_lower_bound`; the first
    feasible one is optimal.
    """
    if len(m.edges) > guard:
        raise GuardExceeded(f"{len(m.edges)} edges exceed the exact-search guard {guard}")
    if not m.edges:
        return 0, EdgeColoring(())
    k = density_lower_bound(m)
    while True:
        try:
            return k, edge_color(m, k)
        except InfeasibleBudget:
            k += 1
