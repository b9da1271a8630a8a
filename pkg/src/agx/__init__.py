"""Exact arithmetic-geometric (AG) index toolkit for chemical graphs.

Chemical graphs are simple undirected graphs with maximum degree four. The
package computes AG indices exactly over the field extension
Q(sqrt2, sqrt3), evaluates the sharp upper bound UB(n, m), constructs
connected extremal graphs, and enumerates chemical graphs and the extremal
family G(n, m) exhaustively.
"""

from .agindex import ag_value, edge_cost, f_value
from .bounds import (BoundReport, EXCEPTIONAL_PAIRS, EXCEPTIONAL_VALUES,
                     canonical_quadruplet, connected_size_range, sharp_bound,
                     upper_bound)
from .canon import canonical_form, canonical_key
from .constructor import (ConstructionPlan, construct_extremal,
                          construct_with_plan, is_member_Gnm)
from .enumeration import (EnumSpec, brute_force_max, derive_exception_catalog,
                          enumerate_Gnm, enumerate_chemical, extremal_counts,
                          set_workers)
from .errors import (AgxError, BudgetExceeded, CatalogMismatch,
                     DegreeExceedsFour, DegreeOutOfRange, DuplicateEdge,
                     ExceptionalPair, Infeasible, InfeasiblePair, LoopEdge,
                     MalformedGraph6, SizeOutOfRange, StaleMove,
                     VertexOutOfRange)
from .exact import ExactValue, exact_compare, exact_min
from .graph6 import decode, encode
from .graphs import ChemicalGraph, Census, build_graph, census, is_connected
from .transforms import (Move, MoveKind, apply_move, delta_lower_bound,
                         find_move, local_search)

__version__ = "1.0.0"
