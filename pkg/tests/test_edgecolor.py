import random

import pytest

from cyclic_coloring.edgecolor import (
    Multigraph,
    chromatic_index,
    default_budget,
    density_lower_bound,
    edge_color,
    is_proper,
)
from cyclic_coloring.exceptions import GuardExceeded, InfeasibleBudget, PreconditionError

from oracles import brute_chromatic_index


def fat_triangle(mu):
    return Multigraph(3, [(0, 1)] * mu + [(1, 2)] * mu + [(0, 2)] * mu)


@pytest.mark.parametrize("mu", [1, 2, 3])
def test_fat_triangle(mu):
    m = fat_triangle(mu)
    k, col = chromatic_index(m)
    assert k == 3 * mu == 3 * m.max_degree // 2
    assert is_proper(m, col.color)
    with pytest.raises(InfeasibleBudget):
        edge_color(m, 3 * mu - 1)


def test_default_budget():
    assert default_budget(fat_triangle(2)) == 6
    # doubled 4-cycle: Delta 4, mu 2, bipartite so chi' = Delta
    m = Multigraph(4, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (3, 0), (3, 0)])
    assert default_budget(m) == 6
    assert chromatic_index(m)[0] == 4


def test_random_multigraphs_against_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 5)
        edges = []
        for _ in range(rng.randint(1, 8)):
            a, b = rng.sample(range(n), 2)
            edges.append((a, b))
        m = Multigraph(n, edges)
        k, col = chromatic_index(m)
        assert is_proper(m, col.color)
        assert k == brute_chromatic_index(n, edges)
        assert density_lower_bound(m) <= k <= default_budget(m)


def test_guard_and_loops():
    with pytest.raises(PreconditionError):
        Multigraph(2, [(0, 0)])
    big = Multigraph(2, [(0, 1)] * 50)
    with pytest.raises(GuardExceeded):
        chromatic_index(big, guard=40)


def test_empty_multigraph():
    assert chromatic_index(Multigraph(3, []))[0] == 0
