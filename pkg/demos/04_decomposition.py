"""
Splitting along a short separating cycle
========================================

Two prisms glued at a pair of opposite vertices form a graph with a
2-vertex cut.  It is split along a cycle no longer than the largest face,
each side is coloured, and the colourings are matched on the cycle.
"""

from cyclic_coloring import color_decomposed, delta_star, find_separating_cycle, split_along_cycle, verify_cyclic
from cyclic_coloring.corpus import glued_instances

g = glued_instances()["glue_prism_prism_diag"]
cyc = find_separating_cycle(g)
print("cycle:", cyc.vertices, "length", cyc.length, "<= Delta* =", delta_star(g))

inner, outer = split_along_cycle(g, cyc)
print("pieces:", inner.graph.vertex_count, "and", outer.graph.vertex_count, "vertices")

col = color_decomposed(g)
print("colours used:", col.colors_used, " verified:", verify_cyclic(g, col))
