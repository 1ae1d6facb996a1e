# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of ``linkatlas._pykernel``.

Same algorithms, same canonical key bytes; see the pure module for the
contract and the commentary.  Kept in lockstep with it on purpose: the
backend parity tests compare the two function by function.
"""

ctypedef unsigned int u32
ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

cdef enum:
    MAXN = 16
    GENCAP = 1024
    QCAP = 512

BACKEND_NAME = "compiled"
CAP = 16
KIND_GRAPH = 0
KIND_GAME = 1
SHORT_WIN = -1
CUT_WIN = -2
OUT_CUT_SECURED = 0
OUT_WEAK = 1
OUT_STRONG = 2


cdef struct CanonState:
    int n
    u32 adj[MAXN]
    int have_best
    u64 best_hi
    u64 best_lo
    int best_lab[MAXN]
    int ngens
    int gens[GENCAP * MAXN]
    int path[MAXN]
    int depth


cdef inline int uf_find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void refine_c(int n, u32* adj, int* lab, int* cellend, u32* queue, int qlen) nogil:
    cdef int head = 0, tail = qlen
    cdef int ncells = 0
    cdef int i, j, k, c, pos, fragstart, nfrag, uniform, changed
    cdef u32 splitter, m
    cdef int cnt[MAXN]
    cdef int tmp[MAXN]
    cdef int ends[MAXN]

    for i in range(n):
        if cellend[i]:
            ncells += 1
    if ncells == n:
        return
    while head < tail:
        splitter = queue[head]
        head += 1
        changed = 0
        i = 0
        while i < n:
            j = i
            while not cellend[j]:
                j += 1
            if j > i:
                uniform = 1
                for k in range(i, j + 1):
                    cnt[k] = __builtin_popcount(adj[lab[k]] & splitter)
                for k in range(i + 1, j + 1):
                    if cnt[k] != cnt[i]:
                        uniform = 0
                        break
                if not uniform:
                    changed = 1
                    # stable counting sort of lab[i..j] by ascending count
                    pos = i
                    nfrag = 0
                    for c in range(n + 1):
                        fragstart = pos
                        for k in range(i, j + 1):
                            if cnt[k] == c:
                                tmp[pos] = lab[k]
                                pos += 1
                        if pos > fragstart:
                            m = 0
                            for k in range(fragstart, pos):
                                m |= (<u32>1) << tmp[k]
                            if tail >= QCAP:
                                # compact the ring; bounded analysis keeps us
                                # far from here, this is a safety valve
                                for k in range(head, tail):
                                    queue[k - head] = queue[k]
                                tail -= head
                                head = 0
                            queue[tail] = m
                            tail += 1
                            ends[nfrag] = pos - 1
                            nfrag += 1
                    for k in range(i, j + 1):
                        lab[k] = tmp[k]
                        cellend[k] = 0
                    for k in range(nfrag):
                        cellend[ends[k]] = 1
                    ncells += nfrag - 1
            i = j + 1
        if changed and ncells == n:
            break


cdef void descend_c(CanonState* st, int* lab, int* cellend):
    cdef int n = st.n
    cdef int i, j, k, a, v, idx, discrete, besti, bestsize, start, size
    cdef int cellstart, rv, ra, rb, skip, fixes, nontrivial, merged, ntried, tsize
    cdef u64 hi, lo
    cdef u32 row
    cdef int target[MAXN]
    cdef int parent[MAXN]
    cdef int tried[MAXN]
    cdef int lab2[MAXN]
    cdef int cellend2[MAXN]
    cdef u32 q[QCAP]
    cdef int* g

    discrete = 1
    for i in range(n):
        if not cellend[i]:
            discrete = 0
            break
    if discrete:
        hi = 0
        lo = 0
        for i in range(n):
            row = st.adj[lab[i]]
            for j in range(i + 1, n):
                hi = (hi << 1) | (lo >> 63)
                lo = (lo << 1) | ((row >> lab[j]) & 1)
        if (not st.have_best) or hi < st.best_hi or (hi == st.best_hi and lo < st.best_lo):
            st.have_best = 1
            st.best_hi = hi
            st.best_lo = lo
            for i in range(n):
                st.best_lab[i] = lab[i]
        elif hi == st.best_hi and lo == st.best_lo:
            if st.ngens < GENCAP:
                g = &st.gens[st.ngens * MAXN]
                for i in range(n):
                    g[st.best_lab[i]] = lab[i]
                nontrivial = 0
                for i in range(n):
                    if g[i] != i:
                        nontrivial = 1
                        break
                if nontrivial:
                    st.ngens += 1
        return

    # first smallest non-singleton cell
    besti = -1
    bestsize = n + 1
    i = 0
    while i < n:
        j = i
        while not cellend[j]:
            j += 1
        size = j - i + 1
        if 1 < size < bestsize:
            besti = i
            bestsize = size
        i = j + 1
    cellstart = besti
    tsize = bestsize
    for k in range(tsize):
        target[k] = lab[cellstart + k]
    # insertion sort ascending
    for i in range(1, tsize):
        v = target[i]
        j = i - 1
        while j >= 0 and target[j] > v:
            target[j + 1] = target[j]
            j -= 1
        target[j + 1] = v

    for i in range(n):
        parent[i] = i
    merged = 0
    ntried = 0
    for idx in range(tsize):
        v = target[idx]
        while merged < st.ngens:
            g = &st.gens[merged * MAXN]
            merged += 1
            fixes = 1
            for k in range(st.depth):
                if g[st.path[k]] != st.path[k]:
                    fixes = 0
                    break
            if fixes:
                for a in range(n):
                    ra = uf_find(parent, a)
                    rb = uf_find(parent, g[a])
                    if ra != rb:
                        parent[ra] = rb
        if ntried:
            rv = uf_find(parent, v)
            skip = 0
            for k in range(ntried):
                if uf_find(parent, tried[k]) == rv:
                    skip = 1
                    break
            if skip:
                continue
        tried[ntried] = v
        ntried += 1

        for k in range(n):
            lab2[k] = lab[k]
            cellend2[k] = cellend[k]
        # move v to the front of its cell, keeping the rest in order
        j = cellstart
        for k in range(cellstart, cellstart + tsize):
            if lab[k] != v:
                j += 1
                lab2[j] = lab[k]
        lab2[cellstart] = v
        cellend2[cellstart] = 1
        q[0] = (<u32>1) << v
        refine_c(n, st.adj, lab2, cellend2, q, 1)
        st.path[st.depth] = v
        st.depth += 1
        descend_c(st, lab2, cellend2)
        st.depth -= 1


cdef void canon_entry(CanonState* st, int n, u32* adj, int kind, int s, int t):
    cdef int lab[MAXN]
    cdef int cellend[MAXN]
    cdef u32 q[QCAP]
    cdef int qlen, pos, v, a, b

    st.n = n
    for v in range(n):
        st.adj[v] = adj[v]
    st.have_best = 0
    st.ngens = 0
    st.depth = 0

    if kind == KIND_GAME:
        a = s if s < t else t
        b = t if s < t else s
        lab[0] = a
        lab[1] = b
        cellend[0] = 0
        cellend[1] = 1
        pos = 2
        for v in range(n):
            if v != s and v != t:
                lab[pos] = v
                cellend[pos] = 0
                pos += 1
        q[0] = ((<u32>1) << a) | ((<u32>1) << b)
        qlen = 1
        if pos > 2:
            cellend[n - 1] = 1
            q[1] = (((<u32>1) << n) - 1) ^ q[0]
            qlen = 2
    else:
        for v in range(n):
            lab[v] = v
            cellend[v] = 0
        cellend[n - 1] = 1
        q[0] = ((<u32>1) << n) - 1
        qlen = 1

    refine_c(n, adj, lab, cellend, q, qlen)
    descend_c(st, lab, cellend)


cdef bytes state_key(CanonState* st, int kind, int mover):
    cdef unsigned char buf[24]
    cdef int n = st.n
    cdef int nbits = n * (n - 1) // 2
    cdef int nbytes = (nbits + 7) // 8
    cdef int shift = nbytes * 8 - nbits
    cdef u64 hi = st.best_hi
    cdef u64 lo = st.best_lo
    cdef int p = 0, k
    if shift:
        hi = (hi << shift) | (lo >> (64 - shift))
        lo = lo << shift
    if mover >= 0:
        buf[p] = <unsigned char>mover
        p += 1
    buf[p] = <unsigned char>kind
    p += 1
    buf[p] = <unsigned char>n
    p += 1
    for k in range(nbytes - 1, -1, -1):
        if k < 8:
            buf[p] = <unsigned char>((lo >> (8 * k)) & 0xFF)
        else:
            buf[p] = <unsigned char>((hi >> (8 * (k - 8))) & 0xFF)
        p += 1
    return buf[:p]


cdef int load_adj(object adj, u32* out) except -1:
    cdef int n = len(adj)
    cdef int v
    if n > MAXN:
        raise ValueError(f"vertex cap {MAXN} exceeded")
    for v in range(n):
        out[v] = adj[v]
    return n


cdef int check_terminals(int n, int s, int t) except -1:
    if s == t or not (0 <= s < n and 0 <= t < n):
        raise ValueError(f"invalid terminal pair ({s}, {t}) for n={n}")
    return 0


# ---------------------------------------------------------------------------
# canonical labelling entry points


def canon_graph_form(int n, adj):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    canon_entry(&st, n, a, KIND_GRAPH, 0, 0)
    lab = tuple(st.best_lab[i] for i in range(n))
    return state_key(&st, KIND_GRAPH, -1), lab


def canon_graph_key(int n, adj):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    canon_entry(&st, n, a, KIND_GRAPH, 0, 0)
    return state_key(&st, KIND_GRAPH, -1)


def canon_game_form(int n, adj, int s, int t):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    check_terminals(n, s, t)
    canon_entry(&st, n, a, KIND_GAME, s, t)
    lab = tuple(st.best_lab[i] for i in range(n))
    return state_key(&st, KIND_GAME, -1), lab


def canon_game_key(int n, adj, int s, int t):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    check_terminals(n, s, t)
    canon_entry(&st, n, a, KIND_GAME, s, t)
    return state_key(&st, KIND_GAME, -1)


def key_to_graph(key):
    cdef int n = key[1]
    cdef int i, j, pos
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


cdef int short_move_c(int n, u32* adj, int s, int t, int v,
                      u32* out, int* out_s, int* out_t) nogil:
    """Fill ``out`` with the position after shorting v; 1 means Short won."""
    cdef u32 nb = adj[v]
    cdef u32 a, low
    cdef int u, w
    cdef u32 tmp[MAXN]
    if ((nb >> s) & 1) and ((nb >> t) & 1):
        return 1
    for u in range(n):
        tmp[u] = adj[u]
    a = nb
    while a:
        low = a & (~a + 1)
        u = __builtin_popcount(low - 1)
        a ^= low
        tmp[u] |= nb & ~low
    w = 0
    for u in range(n):
        if u == v:
            continue
        a = tmp[u]
        out[w] = (a & (((<u32>1) << v) - 1)) | ((a >> (v + 1)) << v)
        w += 1
    out_s[0] = s - (1 if s > v else 0)
    out_t[0] = t - (1 if t > v else 0)
    return 0


cdef u32 component_of(int n, u32* adj, int start, u32 alive) nogil:
    cdef u32 comp = ((<u32>1) << start) & alive
    cdef u32 frontier = comp
    cdef u32 nxt, rem, low
    while frontier:
        nxt = 0
        rem = frontier
        while rem:
            low = rem & (~rem + 1)
            nxt |= adj[__builtin_popcount(low - 1)]
            rem ^= low
        nxt &= alive & ~comp
        comp |= nxt
        frontier = nxt
    return comp


cdef int cut_move_c(int n, u32* adj, int s, int t, int v,
                    int* out_n, u32* out, int* out_s, int* out_t) nogil:
    """Fill ``out`` with the position after cutting v; 1 means Cut won."""
    cdef u32 alive = (((<u32>1) << n) - 1) ^ ((<u32>1) << v)
    cdef u32 comp = component_of(n, adj, s, alive)
    cdef u32 a, rem, low
    cdef int u, w, i
    cdef int index[MAXN]
    if not ((comp >> t) & 1):
        return 1
    if comp == alive:
        w = 0
        for u in range(n):
            if u == v:
                continue
            a = adj[u]
            out[w] = (a & (((<u32>1) << v) - 1)) | ((a >> (v + 1)) << v)
            w += 1
        out_n[0] = n - 1
        out_s[0] = s - (1 if s > v else 0)
        out_t[0] = t - (1 if t > v else 0)
        return 0
    w = 0
    for u in range(n):
        if (comp >> u) & 1:
            index[u] = w
            w += 1
    out_n[0] = w
    w = 0
    for u in range(n):
        if not ((comp >> u) & 1):
            continue
        a = 0
        rem = adj[u] & comp
        while rem:
            low = rem & (~rem + 1)
            a |= (<u32>1) << index[__builtin_popcount(low - 1)]
            rem ^= low
        out[w] = a
        w += 1
    out_s[0] = index[s]
    out_t[0] = index[t]
    return 0


def short_move(int n, adj, int s, int t, int v):
    cdef u32 a[MAXN]
    cdef u32 out[MAXN]
    cdef int s2, t2, u
    load_adj(adj, a)
    check_terminals(n, s, t)
    if short_move_c(n, a, s, t, v, out, &s2, &t2):
        return SHORT_WIN
    return (n - 1, tuple(out[u] for u in range(n - 1)), s2, t2)


def cut_move(int n, adj, int s, int t, int v):
    cdef u32 a[MAXN]
    cdef u32 out[MAXN]
    cdef int n2, s2, t2, u
    load_adj(adj, a)
    check_terminals(n, s, t)
    if cut_move_c(n, a, s, t, v, &n2, out, &s2, &t2):
        return CUT_WIN
    return (n2, tuple(out[u] for u in range(n2)), s2, t2)


def connected_st(int n, adj, int s, int t):
    cdef u32 a[MAXN]
    load_adj(adj, a)
    check_terminals(n, s, t)
    return bool((component_of(n, a, s, (((<u32>1) << n) - 1) ) >> t) & 1)


def is_connected(int n, adj):
    cdef u32 a[MAXN]
    if n == 0:
        return False
    load_adj(adj, a)
    return component_of(n, a, 0, (((<u32>1) << n) - 1)) == (((<u32>1) << n) - 1)


# ---------------------------------------------------------------------------
# solving


cdef bint short_wins_rec(int n, u32* adj, int s, int t, bint short_to_move,
                         dict memo, CanonState* st):
    # invariant: terminals not adjacent, s-t connected
    cdef u32 child[MAXN]
    cdef int order[MAXN]
    cdef int norder, sc, v, n2, s2, t2
    cdef bint result

    canon_entry(st, n, adj, KIND_GAME, s, t)
    key = state_key(st, KIND_GAME, 2 if short_to_move else 3)
    cached = memo.get(key)
    if cached is not None:
        return cached

    norder = 0
    for sc in range(2, -1, -1):
        for v in range(n):
            if v == s or v == t:
                continue
            if (((adj[v] >> s) & 1) + ((adj[v] >> t) & 1)) == sc:
                order[norder] = v
                norder += 1

    if short_to_move:
        result = False
        if adj[s] & adj[t]:
            result = True
        else:
            for sc in range(norder):
                v = order[sc]
                short_move_c(n, adj, s, t, v, child, &s2, &t2)
                if short_wins_rec(n - 1, child, s2, t2, False, memo, st):
                    result = True
                    break
    else:
        result = True
        for sc in range(norder):
            v = order[sc]
            if cut_move_c(n, adj, s, t, v, &n2, child, &s2, &t2):
                result = False
                break
            if not short_wins_rec(n2, child, s2, t2, True, memo, st):
                result = False
                break
    memo[key] = result
    return result


def short_wins(int n, adj, int s, int t, bint short_to_move, dict memo):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    check_terminals(n, s, t)
    if (a[s] >> t) & 1:
        return True
    if not ((component_of(n, a, s, (((<u32>1) << n) - 1)) >> t) & 1):
        return False
    return bool(short_wins_rec(n, a, s, t, short_to_move, memo, &st))


def solve_outcome(int n, adj, int s, int t, dict memo):
    cdef u32 a[MAXN]
    cdef CanonState st
    load_adj(adj, a)
    check_terminals(n, s, t)
    if (a[s] >> t) & 1:
        return OUT_STRONG
    if not ((component_of(n, a, s, (((<u32>1) << n) - 1)) >> t) & 1):
        return OUT_CUT_SECURED
    if short_wins_rec(n, a, s, t, False, memo, &st):
        return OUT_STRONG
    if short_wins_rec(n, a, s, t, True, memo, &st):
        return OUT_WEAK
    return OUT_CUT_SECURED


# ---------------------------------------------------------------------------
# enumeration helpers


def augment_connected_keys(int n, adj):
    cdef u32 base[MAXN]
    cdef u32 child[MAXN]
    cdef CanonState st
    cdef u32 sub, rem, low
    cdef int v
    if n + 1 > MAXN:
        raise ValueError(f"vertex cap {MAXN} exceeded")
    load_adj(adj, base)
    out = set()
    for sub in range(1, (<u32>1) << n):
        for v in range(n):
            child[v] = base[v]
        rem = sub
        while rem:
            low = rem & (~rem + 1)
            child[__builtin_popcount(low - 1)] |= (<u32>1) << n
            rem ^= low
        child[n] = sub
        canon_entry(&st, n + 1, child, KIND_GRAPH, 0, 0)
        out.add(state_key(&st, KIND_GRAPH, -1))
    return out


def pair_orbit_count(int n, adj):
    cdef u32 a[MAXN]
    cdef CanonState st
    cdef int s, t
    load_adj(adj, a)
    seen = set()
    for s in range(n):
        for t in range(s + 1, n):
            canon_entry(&st, n, a, KIND_GAME, s, t)
            seen.add(state_key(&st, KIND_GAME, -1))
    return len(seen)


def pair_orbit_reps(int n, adj):
    cdef u32 a[MAXN]
    cdef CanonState st
    cdef int s, t
    load_adj(adj, a)
    seen = {}
    for s in range(n):
        for t in range(s + 1, n):
            canon_entry(&st, n, a, KIND_GAME, s, t)
            key = state_key(&st, KIND_GAME, -1)
            if key not in seen:
                seen[key] = (s, t)
    return sorted(seen.values())
