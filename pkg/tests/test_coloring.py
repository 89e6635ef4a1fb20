import warnings

import pytest

from cyclic_coloring.coloring import (
    BudgetExceededWarning,
    Method,
    chi_c_exact,
    color_constructive,
    color_decomposed,
    exact_vertex_coloring,
    greedy_cyclic_coloring,
    merge_colorings,
    verify_cyclic,
)
from cyclic_coloring.embedding import delta_star
from cyclic_coloring.exceptions import GuardExceeded, PreconditionError
from cyclic_coloring.generators import (
    cycle,
    platonic,
    prism,
    prism_subdiv,
    regular_subdivide,
    subdivide_edges,
    theta,
    thm6_prism,
)

from oracles import brute_chi_c


@pytest.mark.parametrize(
    "name, value", [("tetrahedron", 4), ("cube", 4), ("octahedron", 3), ("dodecahedron", 5), ("icosahedron", 4)]
)
def test_platonic_values(name, value):
    k, col = chi_c_exact(platonic(name))
    assert k == value
    assert verify_cyclic(platonic(name), col)


def test_exact_matches_brute_force_on_small_corpus(corpus):
    checked = 0
    for name, g in corpus.items():
        if g.vertex_count <= 12:
            assert chi_c_exact(g)[0] == brute_chi_c(g), name
            checked += 1
    assert checked >= 15


def test_exact_vertex_coloring_odd_cycle():
    c5 = [(1 << 1) | (1 << 4), (1 << 0) | (1 << 2), (1 << 1) | (1 << 3), (1 << 2) | (1 << 4), (1 << 3) | (1 << 0)]
    col = exact_vertex_coloring(c5)
    assert max(col) + 1 == 3
    assert exact_vertex_coloring([]) == []


def test_guard():
    with pytest.raises(GuardExceeded):
        chi_c_exact(prism_subdiv(2), guard=10)


def test_verify_detects_clash():
    g = platonic("cube")
    assert not verify_cyclic(g, [0] * 8)
    with pytest.raises(PreconditionError):
        verify_cyclic(g, [0] * 3)


def test_greedy_is_proper(corpus):
    for g in corpus.values():
        assert verify_cyclic(g, greedy_cyclic_coloring(g))


@pytest.mark.parametrize(
    "g",
    [prism_subdiv(1), prism_subdiv(2), thm6_prism(2, 2, 2), regular_subdivide(platonic("cube"), 1),
     subdivide_edges(platonic("octahedron"), {0: 2, 5: 1}), platonic("cube")],
)
def test_constructive_is_verified(g):
    col = color_constructive(g)
    assert col.method is Method.CONSTRUCTIVE
    assert verify_cyclic(g, col)


def test_constructive_needs_subdivision():
    with pytest.raises(PreconditionError):
        color_constructive(theta(2, 2, 2))


def test_decomposed_on_glued(glued):
    for name, g in glued.items():
        col = color_decomposed(g)
        assert verify_cyclic(g, col), name
        assert col.colors_used <= 3 * delta_star(g) // 2, name


def test_decomposed_base_cases():
    assert color_decomposed(cycle(5)).colors_used == 5
    assert color_decomposed(theta(2, 3, 3)).colors_used == 7
    assert color_decomposed(platonic("cube")).colors_used == 4


def test_budget_warning(glued):
    g = glued["glue_prism_prism_diag"]
    with pytest.warns(BudgetExceededWarning):
        color_decomposed(g, palette_budget=1)


def test_no_warning_within_budget():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        color_decomposed(prism())


def test_merge_colorings():
    c1 = {0: 0, 1: 1, 2: 2}
    c2 = {1: 5, 2: 0, 3: 1, 4: 5 + 1}
    merged = merge_colorings(c1, c2, [1, 2])
    assert merged[1] == 1 and merged[2] == 2
    assert merged[3] != merged[4]
    assert merged[3] not in (1, 2) and merged[4] not in (1, 2)
    with pytest.raises(PreconditionError):
        merge_colorings({0: 1, 1: 1}, {0: 0, 1: 2}, [0, 1])
