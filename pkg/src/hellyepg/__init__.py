"""Edge-intersection graphs of grid paths (EPG) with a focus on the Helly property."""

from .graphs import (SimpleGraph, apex_removal_check, degeneracy, generate, helly_bend_bounds,
                     maximal_cliques)
from .grid import (GridEdge, GridPoint, LatticePath, intersect_via_relevant, path_from_corners,
                   paths_intersect, reconstruct_from_relevant, relevant_edges)
from .reduction import (Assignment13, Formula13, build_gf, extract_assignment, parse_formula,
                        realize, solve_1in3)
from .recognizer import SearchBudget, enumerate_paths, recognize_all, recognize_bk
from .representation import (EpgRepresentation, classify_c4, compact, find_claw_cliques,
                             helly_by_cliques, helly_by_gilmore, intersection_graph, realizes,
                             shapes_used)
from .stair import stair_representation

__version__ = "0.1.0"
