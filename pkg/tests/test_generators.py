import pytest

from cyclic_coloring.embedding import (
    cyclic_adjacency,
    delta_star,
    is_two_connected,
    rotation_isomorphism,
    t_of,
    validate,
)
from cyclic_coloring.exceptions import PreconditionError
from cyclic_coloring.generators import (
    PLATONIC_NAMES,
    cycle,
    glue_at_two_cut,
    platonic,
    prism,
    prism_subdiv,
    regular_subdivide,
    subdivide_edges,
    theta,
    thm6_prism,
    wheel,
)
from cyclic_coloring.reduction import Structure, classify, reduce


def test_every_corpus_graph_is_valid(corpus):
    assert len(corpus) >= 40
    for name, g in corpus.items():
        assert validate(g).ok, name
        assert g.vertex_count <= 40, name


@pytest.mark.parametrize("abc", [(2, 2, 2), (1, 2, 2), (2, 3, 4), (1, 1, 1), (1, 1, 4)])
def test_theta_shape(abc):
    g = theta(*abc)
    assert g.vertex_count == sum(abc) - 1
    assert len(g.faces) == 3
    assert sorted(f.degree for f in g.faces) == sorted(
        min(x + y, sum(abc) - 1) for x, y in ((abc[0], abc[1]), (abc[0], abc[2]), (abc[1], abc[2]))
    )


def test_theta_rejects_zero():
    with pytest.raises(PreconditionError):
        theta(0, 2, 2)


@pytest.mark.parametrize("t", range(5))
def test_prism_subdiv(t):
    g = prism_subdiv(t)
    assert g.vertex_count == 3 * t + 6
    assert delta_star(g) == 2 * t + 4
    assert t_of(g) == t
    assert cyclic_adjacency(g).is_complete()


def test_thm6_prism_matches_subdiv():
    assert rotation_isomorphism(thm6_prism(1, 1, 1), prism_subdiv(1)) is not None
    assert thm6_prism(1, 2, 3).vertex_count == 12
    with pytest.raises(PreconditionError):
        thm6_prism(-1, 0, 0)


@pytest.mark.parametrize("name", PLATONIC_NAMES)
@pytest.mark.parametrize("k", [0, 1, 2])
def test_regular_subdivide(name, k):
    base = platonic(name)
    g = regular_subdivide(base, k)
    assert g.vertex_count == base.vertex_count + k * base.edge_count
    assert delta_star(g) == delta_star(base) * (k + 1)
    if k:
        assert t_of(g) == k
    assert rotation_isomorphism(reduce(g).reduced, base) is not None


def test_spec_examples_for_subdivision():
    assert delta_star(regular_subdivide(platonic("cube"), 1)) == 8
    assert delta_star(regular_subdivide(platonic("octahedron"), 2)) == 9
    assert rotation_isomorphism(subdivide_edges(prism(), {6: 2, 7: 2, 8: 2}), prism_subdiv(2)) is not None


def test_platonic_unknown():
    with pytest.raises(PreconditionError):
        platonic("hexahedron")


def test_wheel_and_cycle():
    w = wheel(5)
    assert w.vertex_count == 6 and w.edge_count == 10 and validate(w).ok
    c = cycle(4)
    assert len(c.faces) == 2 and validate(c).ok


def test_glue_double_prism_has_two_cut(glued):
    g = glued["glue_prism_prism_diag"]
    assert is_two_connected(g)
    assert classify(reduce(g)).tag is Structure.TWO_CUT
    assert validate(glued["glue_prism_theta"]).ok


def test_glue_rejects_loop():
    p = prism()
    with pytest.raises(Exception):
        glue_at_two_cut(p, p, 0, 0, 0, 1)
