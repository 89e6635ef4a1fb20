"""Structural invariants checked on random subdivisions and on the corpus."""

from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_coloring.coloring import chi_c_exact, color_constructive, verify_cyclic
from cyclic_coloring.edgecolor import Multigraph, chromatic_index, default_budget, edge_color, is_proper
from cyclic_coloring.embedding import cyclic_adjacency, delta_star, k_star, t_of
from cyclic_coloring.generators import PLATONIC_NAMES, platonic, prism, subdivide_edges, theta, wheel
from cyclic_coloring.reduction import (
    is_subdivision_of_simple_3_connected,
    reduce,
    subdivision_multigraph,
)

from oracles import euler_ok

SEEDS = {name: platonic(name) for name in PLATONIC_NAMES}
SEEDS["prism"] = prism()
SEEDS["wheel_5"] = wheel(5)


@st.composite
def subdivisions(draw, max_count=3):
    name = draw(st.sampled_from(sorted(SEEDS)))
    base = SEEDS[name]
    counts = draw(st.lists(st.integers(0, max_count), min_size=base.edge_count, max_size=base.edge_count))
    return subdivide_edges(base, dict(enumerate(counts)))


thetas = st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)).map(lambda abc: theta(*abc))


def check_embedding_invariants(g):
    assert euler_ok(g)
    assert g.vertex_count - g.edge_count + len(g.faces) == 2
    # every dart lies on exactly one face walk
    darts = Counter(d for f in g.faces for d in f.walk)
    assert sorted(darts) == list(range(g.dart_count)) and set(darts.values()) == {1}
    # each face is a clique of the cyclic adjacency graph
    ca = cyclic_adjacency(g)
    for f in g.faces:
        for u in f.vertices:
            assert f.vertices - {u} <= ca.adjacency[u]


def check_subdivision_invariants(g):
    res = reduce(g)
    assert len(g.faces) == len(res.reduced.faces)
    assert sorted(res.face_map) == list(range(len(g.faces)))
    assert res.round_trip_isomorphism() is not None
    s = subdivision_multigraph(g, res)
    t = t_of(g)
    assert s.multiplicity == t
    if t >= 1:
        assert k_star(g) == t + 2


@settings(max_examples=60, deadline=None)
@given(subdivisions())
def test_invariants_on_random_subdivisions(g):
    check_embedding_invariants(g)
    check_subdivision_invariants(g)


@settings(max_examples=30, deadline=None)
@given(thetas)
def test_invariants_on_thetas(g):
    check_embedding_invariants(g)
    assert len(g.faces) == 3


def test_invariants_on_corpus(corpus):
    subdivisions_seen = 0
    for name, g in corpus.items():
        check_embedding_invariants(g)
        if is_subdivision_of_simple_3_connected(g):
            check_subdivision_invariants(g)
            subdivisions_seen += 1
    assert subdivisions_seen >= 25


@settings(max_examples=25, deadline=None)
@given(subdivisions(max_count=2))
def test_constructive_colouring_is_cyclic(g):
    col = color_constructive(g)
    assert verify_cyclic(g, col)
    if g.vertex_count <= 40:
        assert chi_c_exact(g)[0] >= delta_star(g)


@st.composite
def multigraphs(draw):
    n = draw(st.integers(2, 6))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Multigraph(n, draw(st.lists(pairs, min_size=1, max_size=14)))


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_edge_colouring_within_default_budget(m):
    col = edge_color(m)
    assert is_proper(m, col.color)
    assert col.colors_used <= default_budget(m)
    k, _ = chromatic_index(m)
    assert m.max_degree <= k <= default_budget(m)
