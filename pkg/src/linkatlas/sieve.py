"""Necessary-condition filter for graphs that might support a minimal weak
link, plus the degree-sequence bounds and the per-link bound checker.

The sieve evaluates fourteen conditions in a fixed cheapest-first order and
records the first failure, so discard statistics are comparable run to run.
Every condition is necessary: a discarded graph supports no minimal weak
link under any terminal assignment (the load-bearing soundness property,
cross-checked against the unsieved search).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backend import kernel
from .game import LinkGame


@dataclass(frozen=True)
class SieveVerdict:
    keep: bool
    failed_condition: str | None = None
    candidate_terminal_pairs: tuple[tuple[int, int], ...] = ()
    candidate_pivots: tuple[int, ...] = ()


# Canonical keys of graphs exempt from the d_1 + d_n bound (the one known
# exception link's graph; see reference.DMAX_EXCEPTION_G6).
_DMAX_EXEMPT_KEYS: frozenset[bytes] | None = None
_DMAX_EXEMPT_DEGSEQS: frozenset[tuple[int, ...]] = frozenset()


def _dmax_exemptions() -> tuple[frozenset[bytes], frozenset[tuple[int, ...]]]:
    global _DMAX_EXEMPT_KEYS, _DMAX_EXEMPT_DEGSEQS
    if _DMAX_EXEMPT_KEYS is None:
        from . import graph6, reference

        keys = set()
        seqs = set()
        for text in reference.DMAX_EXCEPTION_G6:
            n, adj = graph6.decode(text)
            keys.add(kernel.canon_graph_key(n, adj))
            seqs.add(tuple(sorted(row.bit_count() for row in adj)))
        _DMAX_EXEMPT_KEYS = frozenset(keys)
        _DMAX_EXEMPT_DEGSEQS = frozenset(seqs)
    return _DMAX_EXEMPT_KEYS, _DMAX_EXEMPT_DEGSEQS


def degree_bounds_ok(degrees: list[int] | tuple[int, ...], n: int) -> bool:
    """Degree-sequence bounds every minimal-weak-link graph satisfies.

    Sequence-only view: the one-graph exemption to the d1+dn bound needs the
    graph itself and is applied by :func:`sieve`.
    """
    return _degree_bounds_failure(sorted(degrees), n, apply_d1dn=True) is None


def _degree_bounds_failure(d: list[int], n: int, apply_d1dn: bool) -> str | None:
    # d sorted ascending
    if n > 3 and d[0] + d[1] < 3:
        return "1:d1+d2>=3"
    if n >= 2:
        if n <= 9 and 2 * (d[0] + d[1]) > n + 1:
            return "1:d1+d2<=(n+1)/2"
        if n > 7 and d[0] + d[1] > n - 4:
            return "1:d1+d2<=n-4"
    if n >= 3:
        if n > 5 and d[0] + d[1] + d[2] > n:
            return "1:d1+d2+d3<=n"
        if n > 7 and d[0] + d[1] + d[2] > n - 1:
            return "1:d1+d2+d3<=n-1"
    if apply_d1dn and n > 7 and d[0] + d[-1] > n - 3:
        return "1:d1+dn<=n-3"
    return None


# -- bare-graph helpers ------------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _triangle_free(adj, v: int) -> bool:
    nb = adj[v]
    rem = nb
    while rem:
        low = rem & -rem
        rem ^= low
        if adj[low.bit_length() - 1] & nb & ~low:
            return False
    return True


def _surrounds(adj, u: int, v: int) -> bool:
    return not (adj[v] & ~(1 << u) & ~adj[u])


def _transverse_edges(n, adj):
    out = []
    for u in range(n):
        rem = adj[u] >> (u + 1)
        while rem:
            low = rem & -rem
            rem ^= low
            v = low.bit_length() - 1 + u + 1
            if _surrounds(adj, u, v) or _surrounds(adj, v, u):
                out.append((u, v))
    return out


def _surrounding_pairs(n, adj):
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            if _surrounds(adj, u, v) and _surrounds(adj, v, u):
                out.append((u, v))
    return out


def _simplicial_after(adj, removed: int, v: int) -> bool:
    nb = adj[v] & ~(1 << removed)
    rem = nb
    while rem:
        low = rem & -rem
        rem ^= low
        u = low.bit_length() - 1
        if nb & ~(1 << u) & ~(adj[u] & ~(1 << removed)):
            return False
    return True


def _threatening_pair_exists(n, adj, allowed_mask: int) -> bool:
    # adjacent pairs inside allowed_mask, each left dead (simplicial) by
    # cutting the other
    for a in _bits(allowed_mask):
        rem = adj[a] & allowed_mask
        rem &= ~((1 << (a + 1)) - 1)
        for b in _bits(rem):
            if _simplicial_after(adj, a, b) and _simplicial_after(adj, b, a):
                return True
    return False


def _bridge_reduce_graph(n, adj):
    """Graph-level bridge reduction; returns (n, adj, blocked) where blocked
    flags a bridge whose anchors were already adjacent."""
    blocked = False
    while True:
        step = None
        for a in range(n):
            if adj[a].bit_count() != 2:
                continue
            for b in range(a + 1, n):
                if adj[b].bit_count() == 2 and adj[a] == adj[b]:
                    x, y = sorted(_bits(adj[a]))
                    if (adj[x] >> y) & 1:
                        blocked = True
                        continue
                    step = (a, b, x, y)
                    break
            if step:
                break
        if step is None:
            return n, adj, blocked
        a, b, x, y = step
        rows = list(adj)
        rows[x] |= 1 << y
        rows[y] |= 1 << x
        keep = [v for v in range(n) if v not in (a, b)]
        index = {v: i for i, v in enumerate(keep)}
        new_rows = []
        for v in keep:
            row = 0
            rem = rows[v] & ~(1 << a) & ~(1 << b)
            while rem:
                low = rem & -rem
                rem ^= low
                row |= 1 << index[low.bit_length() - 1]
            new_rows.append(row)
        n, adj = len(keep), tuple(new_rows)


def candidate_terminal_pairs(n: int, adj: tuple[int, ...]) -> list[tuple[int, int]]:
    """Vertex pairs that could be the terminals of a minimal weak link:
    triangle-free, surrounding no third vertex, non-adjacent, without a
    2-walk for n > 3, degree sum within the centre-size bounds, and forced to
    contain the pendant when one exists."""
    degs = [adj[v].bit_count() for v in range(n)]
    tfree = [_triangle_free(adj, v) for v in range(n)]
    pendants = [v for v in range(n) if degs[v] == 1]
    # surround targets per vertex; a terminal may surround only its co-terminal
    targets: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if u != v and _surrounds(adj, u, v):
                targets[u].add(v)
    out = []
    for s in range(n):
        if not tfree[s]:
            continue
        for t in range(s + 1, n):
            if not tfree[t]:
                continue
            if (adj[s] >> t) & 1:
                continue
            if n > 3 and adj[s] & adj[t]:
                continue  # a 2-walk would embed the one-vertex weak link
            if targets[s] - {t} or targets[t] - {s}:
                continue
            if pendants and s not in pendants and t not in pendants:
                continue
            dsum = degs[s] + degs[t]
            if n > 3 and dsum < 3:
                continue
            if n <= 9 and 2 * dsum > n + 1:
                continue
            if n > 5 and dsum > n - 3:
                continue
            if n > 7 and dsum > n - 4:
                continue
            out.append((s, t))
    return out


def sieve(n: int, adj: tuple[int, ...], tighten: bool = False) -> SieveVerdict:
    """Apply the fourteen necessary conditions, cheapest first.

    ``tighten`` additionally prunes candidate pivots next to a candidate
    terminal by the border-pivot edge rule (off by default; it does not
    change what is kept at these sizes, only the failure statistics).
    """
    degs = [adj[v].bit_count() for v in range(n)]
    d = sorted(degs)

    # 1: degree-sequence bounds, with the known d1+dn exception graph exempt
    fail = _degree_bounds_failure(d, n, apply_d1dn=False)
    if fail is not None:
        return SieveVerdict(False, fail)
    if n > 7 and d[0] + d[-1] > n - 3:
        keys, seqs = _dmax_exemptions()
        if tuple(d) not in seqs or kernel.canon_graph_key(n, adj) not in keys:
            return SieveVerdict(False, "1:d1+dn<=n-3")

    # 2: connected
    if not kernel.is_connected(n, adj):
        return SieveVerdict(False, "2:connected")

    # 3/4: at most one transverse edge, and it must touch a pendant
    # (the underlying lemma exempts the one-vertex weak link, so n > 3)
    if n > 3:
        trans = _transverse_edges(n, adj)
        if len(trans) > 1:
            return SieveVerdict(False, "3:transverse<=1")
        if trans:
            u, v = trans[0]
            if degs[u] != 1 and degs[v] != 1:
                return SieveVerdict(False, "4:transverse-on-pendant")

    # 5: at least 3 triangle-free vertices (two terminals and a pivot)
    tfree = [_triangle_free(adj, v) for v in range(n)]
    if sum(tfree) < 3:
        return SieveVerdict(False, "5:triangle-free>=3")

    # 6: the bridge-reduced graph must itself pass the sieve
    rn, radj, blocked = _bridge_reduce_graph(n, adj)
    if blocked:
        return SieveVerdict(False, "6:bridge-reduced")
    if rn != n and not sieve(rn, radj, tighten).keep:
        return SieveVerdict(False, "6:bridge-reduced")

    # 7: a pendant's neighbour must be triangle-free of degree > 2
    pendants = [v for v in range(n) if degs[v] == 1]
    if pendants and n > 3:
        for p in pendants:
            nb = adj[p].bit_length() - 1
            if not tfree[nb] or degs[nb] <= 2:
                return SieveVerdict(False, "7:pendant-neighbour")

    # 8/9: mutually surrounding pairs: disjoint and triangle-free
    # (again only meaningful past the one-vertex weak link)
    if n > 3:
        spairs = _surrounding_pairs(n, adj)
        seen = set()
        for u, v in spairs:
            if u in seen or v in seen:
                return SieveVerdict(False, "8:surrounding-pairs-disjoint")
            seen.add(u)
            seen.add(v)
        for u, v in spairs:
            if not (tfree[u] and tfree[v]):
                return SieveVerdict(False, "9:surrounding-triangle-free")

    # 10: candidate terminal pairs
    pairs = candidate_terminal_pairs(n, adj)
    if not pairs:
        return SieveVerdict(False, "10:candidate-terminals")

    # 11: no mutual threat among vertices that are never terminal
    in_pair = 0
    for s, t in pairs:
        in_pair |= (1 << s) | (1 << t)
    never_terminal = ((1 << n) - 1) & ~in_pair
    if _threatening_pair_exists(n, adj, never_terminal):
        return SieveVerdict(False, "11:threatened-pair")

    # 12: a candidate opening move must exist (skipped when a pendant forces
    # the pivot; condition 7 already vetted it)
    surrounded = [False] * n
    for u in range(n):
        for v in range(n):
            if u != v and _surrounds(adj, u, v):
                surrounded[v] = True
    pivot_candidates = []
    if not pendants:
        always_terminal = [v for v in range(n) if all(v in (s, t) for s, t in pairs)]
        for v in range(n):
            if not tfree[v] or degs[v] < 3:
                continue  # threatened vertices have a triangle or degree 2
            if surrounded[v]:
                continue
            if v in always_terminal:
                continue
            if any(
                _surrounds(adj, v, u)
                for u in range(n)
                if u != v and not (1 << u) & in_pair
            ):
                continue
            pivot_candidates.append(v)
        if not pivot_candidates:
            return SieveVerdict(False, "12:candidate-pivot")
    else:
        pivot_candidates = [adj[p].bit_length() - 1 for p in pendants]

    # 13: per-pair containment and border-degree tests
    surviving = []
    for s, t in pairs:
        if n > 5 and not _pair_ok_13(n, adj, degs, s, t):
            continue
        surviving.append((s, t))
    if not surviving:
        return SieveVerdict(False, "13:pair-containment")

    # 14: per-pair mutual threat among the remaining vertices
    final_pairs = []
    for s, t in surviving:
        others = ((1 << n) - 1) & ~(1 << s) & ~(1 << t)
        if _threatening_pair_exists(n, adj, others):
            continue
        if tighten and not _tighten_pivot_ok(n, adj, s, t, pivot_candidates):
            continue
        final_pairs.append((s, t))
    if not final_pairs:
        return SieveVerdict(False, "14:pair-threat")

    return SieveVerdict(
        True,
        None,
        tuple(final_pairs),
        tuple(sorted(set(pivot_candidates))),
    )


def _pair_ok_13(n, adj, degs, s, t) -> bool:
    # a border vertex with two 2-walks to the far terminal embeds the
    # three-vertex weak link
    for term, other in ((s, t), (t, s)):
        rem = adj[term]
        while rem:
            low = rem & -rem
            rem ^= low
            v = low.bit_length() - 1
            if (adj[v] & adj[other]).bit_count() > 1:
                return False
    if n > 7:
        for v in range(n):
            if v in (s, t):
                continue
            if (adj[v] & adj[s]).bit_count() > 1 and (adj[v] & adj[t]).bit_count() > 1:
                return False
    # border degrees against the centre size
    p = n - 2 - degs[s] - degs[t]
    border = (adj[s] | adj[t])
    for b in _bits(border):
        if n > 5 and degs[b] > p + 2:
            return False
        if n > 7 and degs[b] > p + 1:
            return False
    return True


def _tighten_pivot_ok(n, adj, s, t, pivot_candidates) -> bool:
    # border-pivot rule: a pivot b next to terminal s admits no edges
    # between its other neighbours and the rest of that border
    for b in pivot_candidates:
        for term in (s, t):
            if not (adj[b] >> term) & 1:
                continue
            rest = adj[term] & ~(1 << b)
            others = adj[b] & ~(1 << term)
            ok = True
            for c in _bits(others):
                if adj[c] & rest:
                    ok = False
                    break
            if ok:
                return True
        if not (adj[b] & ((1 << s) | (1 << t))):
            return True  # non-border pivots are unconstrained by this rule
    return False


@dataclass
class BoundsReport:
    """Per-clause pass/fail evaluation of the structural bounds on one
    minimal weak link; collected by the verification suite."""

    clauses: dict[str, bool] = field(default_factory=dict)
    dmax_exception: bool = False

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]


def theorem_bounds_check(g: LinkGame) -> BoundsReport:
    """Evaluate every degree/centre/articulation bound applicable to a
    minimal weak link of this weight; the one d_max exception is reported,
    not failed."""
    from . import structure
    from .game import summarize

    report = BoundsReport()
    info = summarize(g)
    w = info.w
    degs = [g.degree(v) for v in range(g.n)]

    pend = [v for v in range(g.n) if degs[v] == 1]
    if w > 1:
        report.clauses["pendant:at-most-one"] = len(pend) <= 1
        report.clauses["pendant:is-terminal"] = all(v in (g.s, g.t) for v in pend)

    if w > 3:
        report.clauses["centre:p>=1"] = info.p >= 1
    if w > 5:
        report.clauses["centre:p>=2"] = info.p >= 2
    if w <= 7:
        report.clauses["terminals:2(ds+dt)<=w+3"] = 2 * (info.d_s + info.d_t) <= w + 3

    border = (g.adj[g.s] | g.adj[g.t]) & ~(1 << g.s) & ~(1 << g.t)
    for b in _bits(border):
        if w > 3:
            report.clauses.setdefault("border:d<=p+2", True)
            if degs[b] > info.p + 2:
                report.clauses["border:d<=p+2"] = False
        if w > 5:
            report.clauses.setdefault("border:d<=p+1", True)
            if degs[b] > info.p + 1:
                report.clauses["border:d<=p+1"] = False

    if w > 5:
        report.dmax_exception = info.d_max + min(info.d_s, info.d_t) > w - 1

    report.clauses["articulation:at-most-one"] = _articulation_count(g) <= 1

    if w > 1:
        spairs = structure.mutually_surrounding_pairs(g)
        seen: set[int] = set()
        disjoint = True
        for pair in spairs:
            if pair & seen:
                disjoint = False
            seen |= pair
        report.clauses["surrounding-pairs:disjoint"] = disjoint

        trans = structure.transverse_edges(g)
        report.clauses["transverse:at-most-one"] = len(trans) <= 1
        report.clauses["transverse:on-pendant-terminal"] = all(
            (u in (g.s, g.t) and degs[u] == 1) or (v in (g.s, g.t) and degs[v] == 1)
            for u, v in trans
        )
    return report


def _articulation_count(g: LinkGame) -> int:
    full = (1 << g.n) - 1
    count = 0
    for v in range(g.n):
        alive = full & ~(1 << v)
        start = (alive & -alive).bit_length() - 1
        comp = (1 << start)
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
        if comp != alive:
            count += 1
    return count
