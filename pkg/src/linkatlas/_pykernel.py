"""Bitset graph kernels: canonical labelling, move application, game solving.

Pure-Python twin of the compiled kernel ``linkatlas._ckernel``.  The two
modules implement the same algorithms step for step and must return
byte-identical canonical keys; ``linkatlas.backend`` picks the compiled one
when it is available.

Graphs are passed around as ``(n, adj)`` where ``adj`` is a tuple of ``n``
ints and ``adj[v]`` holds the neighbour set of vertex ``v`` as a bitmask.
Games add an unordered terminal pair ``s, t``.

Canonical keys are bytes ``kind | n | packed-adjacency-bits`` where the bits
are the upper triangle of the adjacency matrix under the canonical labelling,
row major, most significant bit first.  ``kind`` is 0 for a bare graph and 1
for a game (terminal pair treated as one unordered colour class; the
canonical labelling always puts the terminals at labels 0 and 1).
"""

from __future__ import annotations

from collections import deque

BACKEND_NAME = "pure"

CAP = 16

KIND_GRAPH = 0
KIND_GAME = 1

SHORT_WIN = -1
CUT_WIN = -2

OUT_CUT_SECURED = 0
OUT_WEAK = 1
OUT_STRONG = 2


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_terminals(n, s, t):
    if s == t or not (0 <= s < n and 0 <= t < n):
        raise ValueError(f"invalid terminal pair ({s}, {t}) for n={n}")


# ---------------------------------------------------------------------------
# canonical labelling


def _refine(n, adj, cells, active):
    """Coarsest equitable refinement of the ordered partition ``cells``.

    ``active`` is a FIFO of splitter bitmasks.  Every new fragment is pushed
    back as a splitter, so on return every cell has uniform neighbour counts
    into every other cell.  Fragments of a split cell are ordered by
    ascending neighbour count, which keeps the cell order isomorphism
    invariant.
    """
    if len(cells) == n:
        return cells
    while active:
        splitter = active.popleft()
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets = {}
            for v in cell:
                buckets.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(buckets) == 1:
                out.append(cell)
                continue
            changed = True
            for count in sorted(buckets):
                part = buckets[count]
                out.append(part)
                active.append(_mask(part))
        cells = out
        if changed and len(cells) == n:
            break
    return cells


def _canon_search(n, adj, init_cells):
    """Canonical labelling by refinement and individualization.

    Explores the refinement tree, pruning branches that are equivalent to an
    already-explored sibling under automorphisms discovered so far (only
    automorphisms fixing the current individualization path apply).  Returns
    ``(bits, lab)`` for the lexicographically least leaf: ``lab[i]`` is the
    original vertex placed at canonical position ``i`` and ``bits`` packs the
    relabelled upper-triangle adjacency.
    """
    cells = [list(c) for c in init_cells if c]
    cells = _refine(n, adj, cells, deque(_mask(c) for c in cells))
    best_bits = -1
    best_lab = None
    gens = []
    path = []

    def descend(cells):
        nonlocal best_bits, best_lab
        if len(cells) == n:
            lab = [c[0] for c in cells]
            bits = 0
            for i in range(n):
                row = adj[lab[i]]
                for j in range(i + 1, n):
                    bits = (bits << 1) | ((row >> lab[j]) & 1)
            if best_lab is None or bits < best_bits:
                best_bits = bits
                best_lab = lab
            elif bits == best_bits:
                perm = [0] * n
                for i in range(n):
                    perm[best_lab[i]] = lab[i]
                if any(perm[i] != i for i in range(n)):
                    gens.append(perm)
            return

        ti = -1
        tsize = n + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < tsize:
                ti = i
                tsize = len(cell)
        target = sorted(cells[ti])

        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merged = 0
        tried = []
        for v in target:
            while merged < len(gens):
                g = gens[merged]
                merged += 1
                if all(g[u] == u for u in path):
                    for a in range(n):
                        ra, rb = find(a), find(g[a])
                        if ra != rb:
                            parent[ra] = rb
            if tried:
                rv = find(v)
                if any(find(w) == rv for w in tried):
                    continue
            tried.append(v)
            rest = [u for u in cells[ti] if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            path.append(v)
            descend(_refine(n, adj, child, deque([1 << v])))
            path.pop()

    descend(cells)
    return best_bits, best_lab


def _key_bytes(kind, n, bits):
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    return bytes((kind, n)) + (bits << (nbytes * 8 - nbits)).to_bytes(nbytes, "big")


def canon_graph_form(n, adj):
    """Canonical key and labelling of a bare graph."""
    if n > CAP:
        raise ValueError(f"vertex cap {CAP} exceeded")
    bits, lab = _canon_search(n, adj, [list(range(n))])
    return _key_bytes(KIND_GRAPH, n, bits), tuple(lab)


def canon_graph_key(n, adj) -> bytes:
    return canon_graph_form(n, adj)[0]


def canon_game_form(n, adj, s, t):
    """Canonical key and labelling of a game; terminals map to labels 0, 1."""
    if n > CAP:
        raise ValueError(f"vertex cap {CAP} exceeded")
    _check_terminals(n, s, t)
    rest = [v for v in range(n) if v != s and v != t]
    bits, lab = _canon_search(n, adj, [[min(s, t), max(s, t)], rest])
    return _key_bytes(KIND_GAME, n, bits), tuple(lab)


def canon_game_key(n, adj, s, t) -> bytes:
    return canon_game_form(n, adj, s, t)[0]


def key_to_graph(key: bytes):
    """Decode a canonical key back to ``(n, adj)``."""
    n = key[1]
    adj = [0] * n
    data = key[2:]
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if data[pos >> 3] & (0x80 >> (pos & 7)):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return n, tuple(adj)


# ---------------------------------------------------------------------------
# moves


def _delete_reindex(n, adj, v):
    low = (1 << v) - 1
    out = []
    for u in range(n):
        if u == v:
            continue
        a = adj[u]
        out.append((a & low) | ((a >> (v + 1)) << v))
    return tuple(out)


def short_move(n, adj, s, t, v):
    """Short claims v: delete it and join its neighbourhood into a clique.

    Returns ``SHORT_WIN`` when the move makes the terminals adjacent,
    otherwise the reindexed position ``(n, adj, s, t)``.
    """
    _check_terminals(n, s, t)
    nb = adj[v]
    if (nb >> s) & 1 and (nb >> t) & 1:
        return SHORT_WIN
    adj2 = list(adj)
    rem = nb
    while rem:
        low = rem & -rem
        u = low.bit_length() - 1
        rem ^= low
        adj2[u] |= nb & ~low
    return (n - 1, _delete_reindex(n, tuple(adj2), v), s - (s > v), t - (t > v))


def _component_of(n, adj, start, alive):
    comp = (1 << start) & alive
    frontier = comp
    while frontier:
        nxt = 0
        rem = frontier
        while rem:
            low = rem & -rem
            nxt |= adj[low.bit_length() - 1]
            rem ^= low
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def cut_move(n, adj, s, t, v):
    """Cut deletes v.  Returns ``CUT_WIN`` when the terminals are separated,
    otherwise the position restricted to the terminals' component."""
    _check_terminals(n, s, t)
    alive = ((1 << n) - 1) ^ (1 << v)
    comp = _component_of(n, adj, s, alive)
    if not (comp >> t) & 1:
        return CUT_WIN
    if comp == alive:
        return (n - 1, _delete_reindex(n, adj, v), s - (s > v), t - (t > v))
    verts = [u for u in range(n) if (comp >> u) & 1]
    index = {u: i for i, u in enumerate(verts)}
    adj2 = []
    for u in verts:
        b = 0
        rem = adj[u] & comp
        while rem:
            low = rem & -rem
            b |= 1 << index[low.bit_length() - 1]
            rem ^= low
        adj2.append(b)
    return (len(verts), tuple(adj2), index[s], index[t])


def connected_st(n, adj, s, t) -> bool:
    _check_terminals(n, s, t)
    comp = _component_of(n, adj, s, (1 << n) - 1)
    return bool((comp >> t) & 1)


def is_connected(n, adj) -> bool:
    if n == 0:
        return False
    return _component_of(n, adj, 0, (1 << n) - 1) == (1 << n) - 1


# ---------------------------------------------------------------------------
# solving


def _move_order(n, adj, s, t):
    order = []
    for v in range(n):
        if v == s or v == t:
            continue
        score = ((adj[v] >> s) & 1) + ((adj[v] >> t) & 1)
        order.append((-score, v))
    order.sort()
    return [v for _, v in order]


def short_wins(n, adj, s, t, short_to_move, memo) -> bool:
    """Does Short win under optimal play with the given side to move?"""
    if (adj[s] >> t) & 1:
        return True
    if not connected_st(n, adj, s, t):
        return False
    return _short_wins(n, adj, s, t, short_to_move, memo)


def _short_wins(n, adj, s, t, short_to_move, memo):
    # invariant: terminals not adjacent, s-t connected
    key = (b"\x02" if short_to_move else b"\x03") + canon_game_key(n, adj, s, t)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if short_to_move:
        result = False
        if adj[s] & adj[t]:
            result = True  # shorting a common neighbour joins the terminals
        else:
            for v in _move_order(n, adj, s, t):
                n2, adj2, s2, t2 = short_move(n, adj, s, t, v)
                if _short_wins(n2, adj2, s2, t2, False, memo):
                    result = True
                    break
    else:
        result = True
        for v in _move_order(n, adj, s, t):
            pos = cut_move(n, adj, s, t, v)
            if pos == CUT_WIN:
                result = False
                break
            n2, adj2, s2, t2 = pos
            if not _short_wins(n2, adj2, s2, t2, True, memo):
                result = False
                break
    memo[key] = result
    return result


def solve_outcome(n, adj, s, t, memo) -> int:
    """Classify a game: 2 Strong, 1 Weak, 0 CutSecured."""
    if (adj[s] >> t) & 1:
        return OUT_STRONG
    if not connected_st(n, adj, s, t):
        return OUT_CUT_SECURED
    if _short_wins(n, adj, s, t, False, memo):
        return OUT_STRONG
    if _short_wins(n, adj, s, t, True, memo):
        return OUT_WEAK
    return OUT_CUT_SECURED


# ---------------------------------------------------------------------------
# enumeration helpers


def augment_connected_keys(n, adj):
    """Canonical keys of every graph obtained by joining one new vertex to a
    nonempty subset of an (assumed connected) parent graph."""
    if n + 1 > CAP:
        raise ValueError(f"vertex cap {CAP} exceeded")
    out = set()
    newbit = 1 << n
    for sub in range(1, 1 << n):
        adj2 = list(adj)
        rem = sub
        while rem:
            low = rem & -rem
            adj2[low.bit_length() - 1] |= newbit
            rem ^= low
        adj2.append(sub)
        out.add(canon_graph_key(n + 1, tuple(adj2)))
    return out


def pair_orbit_count(n, adj) -> int:
    """Number of non-isomorphic terminal assignments on one graph."""
    seen = set()
    for s in range(n):
        for t in range(s + 1, n):
            seen.add(canon_game_key(n, adj, s, t))
    return len(seen)


def pair_orbit_reps(n, adj):
    """Lexicographically first representative pair of each terminal orbit."""
    seen = {}
    for s in range(n):
        for t in range(s + 1, n):
            key = canon_game_key(n, adj, s, t)
            if key not in seen:
                seen[key] = (s, t)
    return sorted(seen.values())
