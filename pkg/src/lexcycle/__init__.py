"""Multi-sweep lexicographic graph searches and the cycles they fall into."""

from __future__ import annotations

from .checkers import (
    OrderViolation,
    asteroidal_number,
    check_cocomp_order,
    check_i_order,
    check_lexbfs_4pc,
    check_pi_order,
    clique_split,
    find_induced_domino,
    find_induced_ladder,
    flipping_check,
    is_asteroidal_set,
    lmpn,
    validate_transitive_orientation,
)
from .constructions import Fixture, starjoin
from .cycles import CycleReport, detect_cycle, lexcycle, starjoin_cycle_check, transitive_orientation
from .errors import BudgetExceeded, CapExceeded, GraphError, LexCycleError, ParseError
from .graph import (
    Graph,
    ModularPartition,
    Ordering,
    complement,
    diameter,
    distance,
    dual,
    first_difference,
    induced_subgraph,
    is_module,
    quotient_graph,
)
from .io import parse_graph, parse_ordering, serialize_graph, serialize_ordering
from .matrix import BinaryMatrix, iterate_to_fixpoint, potential_vector, sort_cols_lex, sort_rows_lex
from .sweep import SearchKind, SweepTrace, enumerate_lexbfs_orderings, first_sweep, plus_sweep, sweep_sequence

__all__ = [
    "BinaryMatrix", "BudgetExceeded", "CapExceeded", "CycleReport", "Fixture", "Graph", "GraphError",
    "LexCycleError", "ModularPartition", "OrderViolation", "Ordering", "ParseError", "SearchKind",
    "SweepTrace", "asteroidal_number", "check_cocomp_order", "check_i_order", "check_lexbfs_4pc",
    "check_pi_order", "clique_split", "complement", "detect_cycle", "diameter", "distance", "dual",
    "enumerate_lexbfs_orderings", "find_induced_domino", "find_induced_ladder", "first_difference",
    "first_sweep", "flipping_check", "induced_subgraph", "is_asteroidal_set", "is_module",
    "iterate_to_fixpoint", "lexcycle", "lmpn", "parse_graph", "parse_ordering", "plus_sweep",
    "potential_vector", "quotient_graph", "serialize_graph", "serialize_ordering", "sort_cols_lex",
    "sort_rows_lex", "starjoin", "starjoin_cycle_check", "sweep_sequence", "transitive_orientation",
]
