"""Game classification: Strong / Weak / CutSecured, pivots, minimality.

The optimized path runs the kernel's memoized AND/OR search over canonical
keys.  :func:`oracle_outcome` is a deliberately different implementation
(vertex colouring on the fixed graph, no memo, no canonicalization, no
component pruning) kept as an independent correctness oracle.
"""

from __future__ import annotations

import enum

from .backend import kernel
from .game import LinkGame, Win, short_vertex


class OutcomeClass(enum.IntEnum):
    """Three-valued classification; there are no draws.

    ``STRONG``: Short wins even moving second.  ``WEAK``: Short wins moving
    first but not second.  ``CUT_SECURED``: Cut wins even moving second.
    """

    CUT_SECURED = 0
    WEAK = 1
    STRONG = 2

    @property
    def label(self) -> str:
        return {0: "CutSecured", 1: "Weak", 2: "Strong"}[self.value]

    @classmethod
    def from_label(cls, label: str) -> "OutcomeClass":
        for member in cls:
            if member.label == label:
                return member
        raise ValueError(f"unknown outcome class {label!r}")


# Shared transposition table: canonical key + side to move -> Short wins.
# Entries are idempotent values, so sharing across calls is always safe.
_MEMO: dict = {}


def clear_memo() -> None:
    _MEMO.clear()


def memo_size() -> int:
    return len(_MEMO)


def short_wins(g: LinkGame, short_moves_first: bool, memo: dict | None = None) -> bool:
    """Does Short win under optimal play with the stated move order?"""
    table = _MEMO if memo is None else memo
    return kernel.short_wins(g.n, g.adj, g.s, g.t, short_moves_first, table)


def outcome(g: LinkGame, memo: dict | None = None) -> OutcomeClass:
    """Classify a game; disconnected terminals resolve to CutSecured."""
    table = _MEMO if memo is None else memo
    return OutcomeClass(kernel.solve_outcome(g.n, g.adj, g.s, g.t, table))


def pivots(g: LinkGame, memo: dict | None = None) -> frozenset[int]:
    """Non-terminal vertices whose shorting turns this weak link strong."""
    if outcome(g, memo) != OutcomeClass.WEAK:
        raise ValueError("pivots are defined for weak links only")
    found = []
    for v in g.non_terminals():
        nxt = short_vertex(g, v)
        if nxt is Win.SHORT or outcome(nxt, memo) == OutcomeClass.STRONG:
            found.append(v)
    return frozenset(found)


def minimality_edge_order(g: LinkGame) -> list[tuple[int, int]]:
    # triangle edges first: they are the likeliest spectators
    edges = g.edges()
    edges.sort(key=lambda e: not (g.adj[e[0]] & g.adj[e[1]]))
    return edges


def is_minimal(g: LinkGame, memo: dict | None = None) -> bool:
    """True iff deleting every single edge strictly weakens the link.

    Weak links must drop to CutSecured, strong links to Weak or CutSecured;
    CutSecured games are never minimal links.
    """
    base = outcome(g, memo)
    if base == OutcomeClass.CUT_SECURED:
        return False
    for u, v in minimality_edge_order(g):
        if outcome(g.delete_edge(u, v), memo) >= base:
            return False
    return True


# ---------------------------------------------------------------------------
# independent oracle

ORACLE_CAP = 8


def oracle_outcome(g: LinkGame) -> OutcomeClass:
    """Plain exhaustive recursion over vertex colourings of the fixed graph.

    Short's claims are a colour set; Short has won when the terminals are
    joined through Short-coloured vertices, Cut has won when every s-t path
    crosses a Cut-coloured vertex.  Exponential; capped at n <= 8.
    """
    if g.n > ORACLE_CAP:
        raise ValueError(f"oracle is practical only for n <= {ORACLE_CAP}")
    n, adj, s, t = g.n, g.adj, g.s, g.t
    full = (1 << n) - 1
    interior = full & ~(1 << s) & ~(1 << t)

    def reaches(allowed: int) -> bool:
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            rem = frontier
            while rem:
                low = rem & -rem
                rem ^= low
                nxt |= adj[low.bit_length() - 1]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        return bool((comp >> t) & 1)

    def short_wins_here(short_set: int, cut_set: int, short_to_move: bool) -> bool:
        if reaches((1 << s) | (1 << t) | short_set):
            return True
        if not reaches(full & ~cut_set):
            return False
        rem = interior & ~short_set & ~cut_set
        moves = []
        m = rem
        while m:
            low = m & -m
            m ^= low
            moves.append(low)
        if short_to_move:
            return any(short_wins_here(short_set | v, cut_set, False) for v in moves)
        return all(short_wins_here(short_set, cut_set | v, True) for v in moves)

    if (adj[s] >> t) & 1:
        return OutcomeClass.STRONG
    if short_wins_here(0, 0, False):
        return OutcomeClass.STRONG
    if short_wins_here(0, 0, True):
        return OutcomeClass.WEAK
    return OutcomeClass.CUT_SECURED
