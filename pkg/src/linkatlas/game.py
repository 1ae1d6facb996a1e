"""Shannon game positions: graph with an unordered terminal pair.

A :class:`LinkGame` is an immutable simple graph plus two distinct terminal
vertices.  Short claims vertices trying to join the terminals, Cut deletes
vertices trying to separate them.  Claiming is modelled as delete-plus-clique
on the claimed vertex's neighbourhood, which keeps every position a plain
``LinkGame`` and makes canonical-key memoization valid.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from . import graph6
from .backend import CAP, kernel


class Win(enum.Enum):
    """Immediate game resolutions produced by a move."""

    SHORT = "short"
    CUT = "cut"


@dataclass(frozen=True)
class LinkGame:
    """A Shannon game ``(G, {s, t})`` on a simple graph, ``s < t`` normalized."""

    n: int
    adj: tuple[int, ...]
    s: int
    t: int

    def __post_init__(self):
        if not 1 <= self.n <= CAP:
            raise ValueError(f"vertex count must be in 1..{CAP}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbour bits of vertex {v} out of range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rem = row
            while rem:
                low = rem & -rem
                rem ^= low
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.s == self.t:
            raise ValueError("terminals must be distinct")
        if not (0 <= self.s < self.n and 0 <= self.t < self.n):
            raise ValueError("terminal out of range")
        if self.s > self.t:
            lo, hi = self.t, self.s
            object.__setattr__(self, "s", lo)
            object.__setattr__(self, "t", hi)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges, s: int, t: int) -> "LinkGame":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), s, t)

    @classmethod
    def from_graph6(cls, text: str, s: int, t: int) -> "LinkGame":
        n, adj = graph6.decode(text)
        return cls(n, adj, s, t)

    # -- basic views --------------------------------------------------------

    @property
    def terminals(self) -> frozenset[int]:
        return frozenset((self.s, self.t))

    @property
    def weight(self) -> int:
        return self.n - 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (self.adj[u] >> v) & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def non_terminals(self) -> list[int]:
        return [v for v in range(self.n) if v != self.s and v != self.t]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def is_connected(self) -> bool:
        return kernel.is_connected(self.n, self.adj)

    def to_graph6(self) -> str:
        return graph6.encode(self.n, self.adj)

    # -- derived games ------------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "LinkGame":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return LinkGame(self.n, tuple(adj), self.s, self.t)

    def add_edge(self, u: int, v: int) -> "LinkGame":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return LinkGame(self.n, tuple(adj), self.s, self.t)

    def relabel(self, perm) -> "LinkGame":
        """Apply a vertex permutation: new index of v is ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            rem = self.adj[v]
            while rem:
                low = rem & -rem
                rem ^= low
                row |= 1 << perm[low.bit_length() - 1]
            adj[perm[v]] = row
        return LinkGame(self.n, tuple(adj), perm[self.s], perm[self.t])

    # -- canonical forms ----------------------------------------------------

    @cached_property
    def canonical_key(self) -> bytes:
        """Relabelling-invariant identity of (graph, unordered terminal pair)."""
        return kernel.canon_game_key(self.n, self.adj, self.s, self.t)

    def canonical_form(self) -> tuple[bytes, "LinkGame"]:
        """Canonical key plus the relabelled game (terminals at 0 and 1)."""
        key, lab = kernel.canon_game_form(self.n, self.adj, self.s, self.t)
        perm = [0] * self.n
        for pos, v in enumerate(lab):
            perm[v] = pos
        return key, self.relabel(perm)

    def graph_key(self) -> bytes:
        """Canonical identity of the underlying graph, terminals ignored."""
        return kernel.canon_graph_key(self.n, self.adj)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


MoveResult = LinkGame | Win


def short_vertex(g: LinkGame, v: int):
    """Short claims v: v is deleted and its neighbourhood becomes a clique.

    Returns :data:`Win.SHORT` when both terminals neighbour v (the move joins
    them); otherwise the densely reindexed successor position.
    """
    _check_playable(g, v)
    result = kernel.short_move(g.n, g.adj, g.s, g.t, v)
    if result == kernel.SHORT_WIN:
        return Win.SHORT
    n, adj, s, t = result
    return LinkGame(n, adj, s, t)


def cut_vertex(g: LinkGame, v: int):
    """Cut deletes v.  Returns :data:`Win.CUT` when the terminals are
    separated; otherwise the position restricted to the terminals' component
    (other components cannot affect the outcome)."""
    _check_playable(g, v)
    result = kernel.cut_move(g.n, g.adj, g.s, g.t, v)
    if result == kernel.CUT_WIN:
        return Win.CUT
    n, adj, s, t = result
    return LinkGame(n, adj, s, t)


def _check_playable(g: LinkGame, v: int):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if v == g.s or v == g.t:
        raise ValueError(f"vertex {v} is a terminal")


def surrounds(g: LinkGame, u: int, v: int) -> bool:
    """True iff every neighbour of v other than u is a neighbour of u."""
    if u == v:
        raise ValueError("surrounds needs two distinct vertices")
    return not (g.adj[v] & ~(1 << u) & ~g.adj[u])


@dataclass(frozen=True)
class LinkSummary:
    """Derived statistics of a link.

    ``w = d_s + d_t + p`` holds when the borders are disjoint and the
    terminals are not adjacent (every minimal weak link except W1); p is
    always reported as the number of non-terminal, non-border vertices.
    """

    w: int
    d_s: int
    d_t: int
    p: int
    E: int
    d_max: int
    dist_st: int
    borders_overlap: bool

    def as_dict(self) -> dict:
        return {
            "w": self.w,
            "d_s": self.d_s,
            "d_t": self.d_t,
            "p": self.p,
            "E": self.E,
            "d_max": self.d_max,
            "dist_st": self.dist_st,
            "borders_overlap": self.borders_overlap,
        }


def summarize(g: LinkGame) -> LinkSummary:
    """Weight, terminal degrees, centre size, edge count, maximum degree and
    terminal distance of a connected game."""
    if not g.is_connected():
        raise ValueError("summarize requires a connected game")
    border_s = g.adj[g.s]
    border_t = g.adj[g.t]
    centre = ((1 << g.n) - 1) & ~border_s & ~border_t & ~(1 << g.s) & ~(1 << g.t)
    overlap = bool(border_s & border_t) or g.has_edge(g.s, g.t)
    return LinkSummary(
        w=g.n - 2,
        d_s=g.degree(g.s),
        d_t=g.degree(g.t),
        p=centre.bit_count(),
        E=g.edge_count,
        d_max=max(g.degree(v) for v in range(g.n)),
        dist_st=_distance(g, g.s, g.t),
        borders_overlap=overlap,
    )


def _distance(g: LinkGame, a: int, b: int) -> int:
    seen = 1 << a
    frontier = seen
    dist = 0
    while frontier:
        if (frontier >> b) & 1:
            return dist
        nxt = 0
        rem = frontier
        while rem:
            low = rem & -rem
            rem ^= low
            nxt |= g.adj[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
        dist += 1
    raise ValueError(f"vertices {a} and {b} are disconnected")


def two_cut_components(g: LinkGame) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All maximal vertex sets U (possibly disconnected) whose neighbourhood
    is exactly a pair {x, y}; returned as ``(separator, U)`` entries.

    Found by deleting every vertex pair and collecting the components whose
    outside neighbourhood is exactly that pair, which subsumes the
    articulation-vertex scan."""
    if not g.is_connected():
        raise ValueError("two_cut_components requires a connected game")
    out = []
    full = (1 << g.n) - 1
    for x in range(g.n):
        for y in range(x + 1, g.n):
            alive = full & ~(1 << x) & ~(1 << y)
            rem = alive
            union = 0
            while rem:
                start = (rem & -rem).bit_length() - 1
                comp = _component(g, start, alive)
                rem &= ~comp
                nb = 0
                c = comp
                while c:
                    low = c & -c
                    c ^= low
                    nb |= g.adj[low.bit_length() - 1]
                nb &= ~comp
                if nb == (1 << x) | (1 << y):
                    union |= comp
            if union:
                out.append(
                    (frozenset((x, y)), frozenset(_bits(union)))
                )
    return out


def _component(g: LinkGame, start: int, alive: int) -> int:
    comp = (1 << start) & alive
    frontier = comp
    while frontier:
        nxt = 0
        rem = frontier
        while rem:
            low = rem & -rem
            rem ^= low
            nxt |= g.adj[low.bit_length() - 1]
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp
