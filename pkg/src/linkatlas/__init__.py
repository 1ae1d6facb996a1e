"""linkatlas: minimal weak and strong links in the Shannon vertex game.

Enumerates connected graphs and non-isomorphic Shannon games, classifies
them (Strong / Weak / CutSecured), runs the necessary-condition sieve, finds
every minimal link at desk scale, derives strong links from weak ones, and
reproduces the reference statistics tables.
"""

from .atlas import Atlas, LinkRecord, build_link_record, classify_reducibility, named_link
from .backend import active_backend
from .game import (
    LinkGame,
    LinkSummary,
    Win,
    cut_vertex,
    short_vertex,
    summarize,
    surrounds,
    two_cut_components,
)
from .solver import OutcomeClass, is_minimal, oracle_outcome, outcome, pivots, short_wins
from .search import (
    GraphStream,
    connected_graphs,
    count_shannon_games,
    derive_minimal_strong,
    find_minimal_strong_direct,
    find_minimal_weak,
    iter_shannon_games,
    shannon_games,
)
from .sieve import SieveVerdict, candidate_terminal_pairs, degree_bounds_ok, sieve, theorem_bounds_check

__version__ = "0.1.0"

__all__ = [
    "Atlas",
    "LinkGame",
    "LinkRecord",
    "LinkSummary",
    "OutcomeClass",
    "GraphStream",
    "SieveVerdict",
    "Win",
    "active_backend",
    "build_link_record",
    "candidate_terminal_pairs",
    "classify_reducibility",
    "connected_graphs",
    "count_shannon_games",
    "cut_vertex",
    "degree_bounds_ok",
    "derive_minimal_strong",
    "find_minimal_strong_direct",
    "find_minimal_weak",
    "is_minimal",
    "iter_shannon_games",
    "named_link",
    "oracle_outcome",
    "outcome",
    "pivots",
    "shannon_games",
    "short_vertex",
    "short_wins",
    "sieve",
    "summarize",
    "surrounds",
    "theorem_bounds_check",
    "two_cut_components",
]
