"""Exact solving, strategies, and verification for the cordiality and balance games."""

from .game import (
    GameState,
    IllegalMoveError,
    Move,
    Objective,
    PASS,
    Player,
    Variant,
    ONE_STARTS,
    ONE_STARTS_WITH_PASS,
    VARIANT_CODES,
    ZERO_STARTS,
    apply_move,
    is_terminal,
    legal_moves,
    new_game,
    terminal_value,
    to_move,
)
from .graph6 import Graph6Error, emit_graph6, parse_edge_list, parse_graph6, parse_graph6_file
from .graphs import (
    CutStats,
    Graph,
    GraphError,
    cut_stats,
    from_edges,
    is_balanced_bipartition,
    is_cordial_labeling,
    path_graph,
    random_connected_graph,
    spider_graph,
    star_graph,
)
from .branching import BranchDecomposition, PathComponents, arm_components, find_branch
from .harness import StrategyMoveError, worst_case_line, worst_case_vs_optimal
from .makerbreaker import (
    SetFamily,
    export_hypergraph,
    maker_breaker_value,
    parse_hypergraph,
    winning_family,
)
from .oracle import brute_force_value
from .solver import (
    SolveOptions,
    SolveResult,
    SolverCapError,
    SYMMETRY_NONE,
    SYMMETRY_PATH_REVERSAL,
    best_line,
    game_number,
    solve,
)
from .strategies import (
    CASE6_WINNING_SETS,
    Strategy,
    StrategyError,
    balance_maximizer_strategy,
    small_path_strategy,
    path_bound,
    path_bound_mod6,
    path_strategy,
    suffix_pair_edge,
    tree_bound,
    tree_strategy,
)
from .trees import (
    NonTreeError,
    TreeCode,
    centroids,
    enumerate_trees,
    enumerate_trees_via_prufer,
    prufer_decode,
    tree_canonical_code,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
