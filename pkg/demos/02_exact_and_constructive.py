"""
Exact versus constructive cyclic colourings
===========================================

The exact oracle colours the cyclic adjacency graph by branch and bound.
The constructive pipeline colours the branch vertices and the degree-2
vertices separately and never needs a search over the whole graph.
"""

from cyclic_coloring import chi_c_exact, color_constructive, delta_star, verify_cyclic
from cyclic_coloring.generators import platonic, regular_subdivide, thm6_prism

for name, g in [
    ("thm6_prism(2,2,2)", thm6_prism(2, 2, 2)),
    ("cube, every edge subdivided once", regular_subdivide(platonic("cube"), 1)),
    ("octahedron, every edge subdivided twice", regular_subdivide(platonic("octahedron"), 2)),
]:
    exact, _ = chi_c_exact(g)
    built = color_constructive(g)
    assert verify_cyclic(g, built)
    print(f"{name}: exact {exact}, constructive {built.colors_used}, floor(3*Delta*/2) = {3 * delta_star(g) // 2}")
