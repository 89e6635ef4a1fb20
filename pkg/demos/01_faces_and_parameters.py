"""
Faces and parameters of a plane graph
=====================================

A plane graph is stored as a rotation system: for each vertex, the
clockwise order of its incident darts.  Faces fall out of walking the darts.
"""

from cyclic_coloring import delta_star, k_star, t_of
from cyclic_coloring.embedding import cyclic_adjacency
from cyclic_coloring.generators import platonic, prism_subdiv

# The cube: six square faces.
cube = platonic("cube")
for f in cube.faces:
    print(f.index, f.vertex_walk)
print("Delta* =", delta_star(cube), " k* =", k_star(cube))

# A prism whose three joining edges each carry two extra vertices.
g = prism_subdiv(2)
print("vertices:", g.vertex_count, " Delta* =", delta_star(g), " t =", t_of(g), " k* =", k_star(g))

# Every pair of vertices shares a face, so each needs its own colour.
print("cyclic adjacency complete:", cyclic_adjacency(g).is_complete())
