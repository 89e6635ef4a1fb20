"""Independent brute-force oracles used to cross-check the library.

Nothing here calls into cyclic_coloring beyond reading a graph's adjacency
rows, so a bug in the library's face tracing or search cannot hide itself.
"""

from itertools import combinations


def faces_from_rows(rows):
    """Face vertex sets traced directly from clockwise ``(nbr, edge)`` rows.

    A dart is ``(v, i)``: the i-th entry of v's row.  Leaving along it to w,
    the walk continues with the entry after the matching one at w.
    """
    back = {}
    for v, row in enumerate(rows):
        for i, (w, e) in enumerate(row):
            back.setdefault(e, []).append((v, i))
    seen = set()
    faces = []
    for v, row in enumerate(rows):
        for i in range(len(row)):
            if (v, i) in seen:
                continue
            verts = []
            cur = (v, i)
            while cur not in seen:
                seen.add(cur)
                x, j = cur
                verts.append(x)
                w, e = rows[x][j]
                a, b = back[e]
                y, k = b if a == (x, j) else a
                cur = (y, (k + 1) % len(rows[y]))
            faces.append(verts)
    return faces


def cyclic_neighbours(rows):
    n = len(rows)
    adj = [set() for _ in range(n)]
    for face in faces_from_rows(rows):
        for a in face:
            adj[a].update(face)
    for v in range(n):
        adj[v].discard(v)
    return adj


def min_coloring(adj):
    """Smallest k with a proper k-colouring, by plain backtracking on k = 1, 2, ..."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    for k in range(1, n + 1):
        color = {}

        def place(i, used):
            if i == n:
                return True
            v = order[i]
            # colours are interchangeable: never open more than one new colour
            for c in range(min(k, used + 1)):
                if all(color.get(w) != c for w in adj[v]):
                    color[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
                    del color[v]
            return False

        if place(0, 0):
            return k
    return 0


def brute_chi_c(g):
    return min_coloring(cyclic_neighbours(g.adjacency()))


def brute_chromatic_index(n, edges):
    """Chromatic index of a small multigraph via its line graph."""
    adj = [set() for _ in edges]
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            adj[i].add(j)
            adj[j].add(i)
    return min_coloring(adj) if edges else 0


def euler_ok(g):
    return g.vertex_count - g.edge_count + len(faces_from_rows(g.adjacency())) == 2


def is_jordan_split(g, cycle_vertices, inside_edges, outside_edges):
    """Faces never mix inside and outside edges, and all edges are accounted for."""
    rows = g.adjacency()
    on_cycle = set()
    k = len(cycle_vertices)
    for i in range(k):
        a, b = cycle_vertices[i], cycle_vertices[(i + 1) % k]
        on_cycle.add(frozenset((a, b)))
    all_edges = set(range(g.edge_count))
    cyc_edges = all_edges - set(inside_edges) - set(outside_edges)
    if set(inside_edges) & set(outside_edges) or len(cyc_edges) != k:
        return False
    if {frozenset(g.endpoints(e)) for e in cyc_edges} != on_cycle:
        return False
    # trace faces again, this time keeping edge ids
    back = {}
    for v, row in enumerate(rows):
        for i, (w, e) in enumerate(row):
            back.setdefault(e, []).append((v, i))
    seen = set()
    for v, row in enumerate(rows):
        for i in range(len(row)):
            if (v, i) in seen:
                continue
            edges = set()
            cur = (v, i)
            while cur not in seen:
                seen.add(cur)
                x, j = cur
                w, e = rows[x][j]
                edges.add(e)
                a, b = back[e]
                y, kk = b if a == (x, j) else a
                cur = (y, (kk + 1) % len(rows[y]))
            if edges & set(inside_edges) and edges & set(outside_edges):
                return False
    return True
