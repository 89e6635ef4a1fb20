"""Cyclic colouring of plane graphs given as rotation systems.

The main entry points:

* :mod:`~cyclic_coloring.embedding` for the ``PlaneGraph`` type, faces and
  scalar parameters;
* :mod:`~cyclic_coloring.generators` for the graph families;
* :mod:`~cyclic_coloring.coloring` for the exact oracle and the constructive
  pipelines;
* :mod:`~cyclic_coloring.bounds` for upper bounds and per-graph reports.
"""

from .bounds import BoundReport, Verdict, bound_report
from .coloring import (
    BudgetExceededWarning,
    CyclicColoring,
    Method,
    chi_c_exact,
    color_constructive,
    color_decomposed,
    verify_cyclic,
)
from .edgecolor import Multigraph, chromatic_index, edge_color
from .embedding import (
    PlaneGraph,
    cyclic_adjacency,
    delta,
    delta_star,
    k_star,
    small_delta,
    t_of,
    validate,
)
from .exceptions import (
    CyclicColoringError,
    GuardExceeded,
    HypothesisError,
    InfeasibleBudget,
    InvalidEmbedding,
    ParseError,
    PreconditionError,
)
from .fileformat import dump, dumps, load, loads
from .reduction import classify, find_separating_cycle, reduce, split_along_cycle, subdivision_multigraph

__version__ = "0.1.0"
