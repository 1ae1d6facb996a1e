"""Structural predicates and outcome-preserving reductions.

Dead edges, transverse edges, surrounding / supporting / threatening pairs,
bridge reduction, short-cuts and induced subgames.  Deadness and threat use
only sufficient (sound) rules: simplicial or pendant non-terminal vertices,
edges across a terminal, non-terminal transverse edges.
"""

from __future__ import annotations

import enum

from .game import LinkGame, Win, cut_vertex, short_vertex, surrounds

Edge = tuple[int, int]
Pair = frozenset[int]


class PairKind(enum.Enum):
    """Vertex-pair relations detected by this module."""

    MUTUALLY_SURROUNDING = "mutually-surrounding"
    MUTUALLY_SUPPORTING = "mutually-supporting"
    MUTUALLY_THREATENING = "mutually-threatening"
    SHORT_CUT = "short-cut"
    BRIDGE = "bridge"


def transverse_edges(g: LinkGame) -> frozenset[Edge]:
    """Edges between a vertex and a vertex surrounding it."""
    out = set()
    for u, v in g.edges():
        if surrounds(g, u, v) or surrounds(g, v, u):
            out.add((u, v))
    return frozenset(out)


def dead_edges(g: LinkGame) -> frozenset[Edge]:
    """Sufficient dead-edge detector, iterated to a fixed point.

    An edge is marked dead when it is transverse with neither endpoint a
    terminal, or when it joins two neighbours of the same terminal.
    """
    dead: set[Edge] = set()
    current = g
    while True:
        found = set()
        for u, v in transverse_edges(current):
            if u not in (g.s, g.t) and v not in (g.s, g.t):
                found.add((u, v))
        for term in (g.s, g.t):
            row = current.adj[term]
            for u, v in current.edges():
                if (row >> u) & 1 and (row >> v) & 1:
                    found.add((u, v))
        found -= dead
        if not found:
            return frozenset(dead)
        dead |= found
        for u, v in found:
            current = current.delete_edge(u, v)


def mutually_surrounding_pairs(g: LinkGame) -> frozenset[Pair]:
    """Pairs surrounding each other, computed after removing the dead
    transverse edges (those with no terminal endpoint).

    Minimal links carry no dead edges, so the removal is a no-op there.
    """
    current = g
    for u, v in transverse_edges(g):
        if u not in (g.s, g.t) and v not in (g.s, g.t):
            current = current.delete_edge(u, v)
    out = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if surrounds(current, u, v) and surrounds(current, v, u):
                out.add(frozenset((u, v)))
    return frozenset(out)


def mutually_supporting_pairs(g: LinkGame) -> frozenset[Pair]:
    """Non-terminal mutually surrounding pairs: Short may claim both as a
    free move without changing the outcome."""
    terminals = g.terminals
    return frozenset(
        p for p in mutually_surrounding_pairs(g) if not (p & terminals)
    )


def _dead_after_cut(g: LinkGame, removed: int, v: int) -> bool:
    # sufficient test: non-terminal and simplicial (clique neighbourhood,
    # which covers degree <= 1) once `removed` is gone
    if v in (g.s, g.t):
        return False
    nb = g.adj[v] & ~(1 << removed)
    rem = nb
    while rem:
        low = rem & -rem
        rem ^= low
        u = low.bit_length() - 1
        if nb & ~(1 << u) & ~(g.adj[u] & ~(1 << removed)):
            return False
    return True


def mutually_threatening_pairs(g: LinkGame) -> frozenset[Pair]:
    """Adjacent non-terminal pairs where cutting either leaves the other dead
    by the sufficient test; Cut effectively owns both."""
    out = set()
    for a in g.non_terminals():
        for b in g.non_terminals():
            if b <= a or not g.has_edge(a, b):
                continue
            if _dead_after_cut(g, a, b) and _dead_after_cut(g, b, a):
                out.add(frozenset((a, b)))
    return frozenset(out)


def bridge_pairs(g: LinkGame) -> list[tuple[int, int, int, int]]:
    """Degree-2 twin pairs ``(a, b)`` with common neighbourhood ``{x, y}``."""
    out = []
    for a in range(g.n):
        if g.degree(a) != 2:
            continue
        for b in range(a + 1, g.n):
            if g.degree(b) == 2 and g.adj[a] == g.adj[b]:
                nb = sorted(_bits(g.adj[a]))
                out.append((a, b, nb[0], nb[1]))
    return out


def bridge_reduce_info(g: LinkGame) -> tuple[LinkGame, bool]:
    """Fixed point of replacing non-terminal bridges by an edge.

    Returns the reduced game and a flag set when some bridge could not be
    reduced because its anchor pair is already adjacent (the added edge would
    duplicate one; such a link is never minimal).
    """
    current = g
    blocked = False
    while True:
        step = None
        for a, b, x, y in bridge_pairs(current):
            if a in (current.s, current.t) or b in (current.s, current.t):
                continue
            if current.has_edge(x, y):
                blocked = True
                continue
            step = (a, b, x, y)
            break
        if step is None:
            return current, blocked
        a, b, x, y = step
        adj = list(current.add_edge(x, y).adj)
        keep = [v for v in range(current.n) if v not in (a, b)]
        index = {v: i for i, v in enumerate(keep)}
        new_adj = []
        for v in keep:
            row = 0
            rem = adj[v] & ~(1 << a) & ~(1 << b)
            while rem:
                low = rem & -rem
                rem ^= low
                row |= 1 << index[low.bit_length() - 1]
            new_adj.append(row)
        current = LinkGame(
            len(keep), tuple(new_adj), index[current.s], index[current.t]
        )


def bridge_reduce(g: LinkGame) -> LinkGame:
    return bridge_reduce_info(g)[0]


def short_cuts(g: LinkGame) -> list[tuple[int, int]]:
    """Ordered pairs ``(a, b)``: adjacent non-terminals, ``b`` of degree 2,
    adjacent to exactly one terminal and at distance 2 from the other."""
    out = []
    terminals = (g.s, g.t)
    for b in g.non_terminals():
        if g.degree(b) != 2:
            continue
        adjacent_terms = [x for x in terminals if g.has_edge(b, x)]
        if len(adjacent_terms) != 1:
            continue
        other = g.t if adjacent_terms[0] == g.s else g.s
        if not (g.adj[b] & g.adj[other]):
            continue  # distance 2 needs a common neighbour (non-adjacency is implied)
        a = next(v for v in _bits(g.adj[b]) if v != adjacent_terms[0])
        out.append((a, b))
    return out


def apply_short_cut(g: LinkGame, pair: tuple[int, int]):
    """Cut the degree-2 member and short its partner; preserves the outcome
    for minimal links, weak links with Short to play, and games with a
    second-player win."""
    if pair not in short_cuts(g):
        raise ValueError(f"{pair} is not a short-cut of this game")
    a, b = pair
    after_cut = cut_vertex(g, b)
    if after_cut is Win.CUT:
        return Win.CUT
    # track the partner through the cut's component restriction
    alive = ((1 << g.n) - 1) ^ (1 << b)
    comp = _component_mask(g, g.s, alive)
    if not (comp >> a) & 1:
        return after_cut  # partner pruned with a dead component; nothing to short
    a2 = (comp & ((1 << a) - 1)).bit_count()
    return short_vertex(after_cut, a2)


def _component_mask(g: LinkGame, start: int, alive: int) -> int:
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


def capture_pair(g: LinkGame, pair: Pair):
    """Short claims both members of a mutually supporting pair (a free move);
    the outcome class is preserved."""
    if pair not in mutually_supporting_pairs(g):
        raise ValueError(f"{set(pair)} is not a mutually supporting pair")
    a, b = sorted(pair)
    first = short_vertex(g, a)
    if first is Win.SHORT:
        return Win.SHORT
    return short_vertex(first, b - (b > a))


def induced_subgames(g: LinkGame) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Proper induced Shannon subgames: every terminal-free vertex set U with
    ``|U| >= 2``, exactly two outside neighbours, and smaller than the play
    area.  Returned as ``(U, separator)`` entries.

    All qualifying U are enumerated, i.e. every union of components of
    ``G - {x, y}`` whose joint neighbourhood is exactly ``{x, y}``; the
    maximal merge alone can hide a proper subgame behind an over-full one.
    """
    from itertools import combinations

    out = []
    full = (1 << g.n) - 1
    terminals = (1 << g.s) | (1 << g.t)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            pair_mask = (1 << x) | (1 << y)
            alive = full & ~pair_mask
            family = []
            rem = alive
            while rem:
                start = (rem & -rem).bit_length() - 1
                comp = _component_mask(g, start, alive)
                rem &= ~comp
                if comp & terminals:
                    continue
                nb = 0
                c = comp
                while c:
                    low = c & -c
                    c ^= low
                    nb |= g.adj[low.bit_length() - 1]
                if nb & ~comp == pair_mask:
                    family.append(comp)
            for k in range(1, len(family) + 1):
                for combo in combinations(family, k):
                    u = 0
                    for comp in combo:
                        u |= comp
                    if 2 <= u.bit_count() < g.n - 2:
                        out.append((frozenset(_bits(u)), frozenset((x, y))))
    return out


def expand_edge_to_bridge(g: LinkGame, edge: Edge) -> LinkGame:
    """Replace an edge by a bridge (two new degree-2 twins), raising the
    weight by two; the inverse of one bridge-reduction step."""
    u, v = edge
    base = g.delete_edge(u, v)
    n = g.n
    adj = list(base.adj) + [0, 0]
    for w in (n, n + 1):
        adj[u] |= 1 << w
        adj[v] |= 1 << w
        adj[w] = (1 << u) | (1 << v)
    return LinkGame(n + 2, tuple(adj), g.s, g.t)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
