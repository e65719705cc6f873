"""dipair: reachability, dihomotopy classes and finite pair component
categories of finite pre-cubical sets."""

from .precubical import (CellId, EuclideanComplex, GridPoint, PreCubicalSet,
                         builtin, from_euclidean, grid_point, parse_point,
                         product, subdivide, validate)
from .fundcat import (DEFAULT_BUDGET, DipathClass, EdgePath, ExtMorphism,
                      compose, enumerate_dipaths, homset, square_classes,
                      trace_pi0)
from .reach import (branch_cubes, e_region, future_set, has_directed_loop,
                    past_set, reachable, skeleton)
from .ordercomp import (OrderType, PairObject, canonical_rep,
                        cube_pair_category, order_category, order_objects,
                        order_type)
from .graphcomp import check_unique_path, graph_components
from .analytic import (PnPoset, TraceType, boundary_trace_type,
                       interval_category, pn_extension_category,
                       torus_category)
from .errors import (BudgetExceeded, DipairError, InputError, LoopsPresent,
                     NotAGraph, UniquePathViolated)

__version__ = "0.1.0"
