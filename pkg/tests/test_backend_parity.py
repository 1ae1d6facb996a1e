"""The compiled kernel and the pure-Python kernel must agree bit for bit."""

import random

import pytest

from linkatlas import _pykernel as pure

compiled = pytest.importorskip("linkatlas._ckernel")


def random_graph(rng, n):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < rng.choice([0.15, 0.4, 0.7]):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return tuple(adj)


def test_exhaustive_small_graphs():
    # every labelled graph on up to 4 vertices, every terminal pair
    for n in range(1, 5):
        pairs = n * (n - 1) // 2
        for bits in range(1 << pairs):
            adj = [0] * n
            k = 0
            for u in range(n):
                for v in range(u + 1, n):
                    if (bits >> k) & 1:
                        adj[u] |= 1 << v
                        adj[v] |= 1 << u
                    k += 1
            adj = tuple(adj)
            assert pure.canon_graph_form(n, adj) == compiled.canon_graph_form(n, adj)
            for s in range(n):
                for t in range(s + 1, n):
                    assert pure.canon_game_form(n, adj, s, t) == compiled.canon_game_form(
                        n, adj, s, t
                    )


def test_random_parity_all_functions():
    rng = random.Random(123)
    for _ in range(500):
        n = rng.randint(2, 11)
        adj = random_graph(rng, n)
        s, t = rng.sample(range(n), 2)
        assert pure.canon_graph_key(n, adj) == compiled.canon_graph_key(n, adj)
        assert pure.canon_game_key(n, adj, s, t) == compiled.canon_game_key(n, adj, s, t)
        assert pure.pair_orbit_reps(n, adj) == compiled.pair_orbit_reps(n, adj)
        assert pure.pair_orbit_count(n, adj) == compiled.pair_orbit_count(n, adj)
        if n <= 9:
            assert pure.augment_connected_keys(n, adj) == compiled.augment_connected_keys(
                n, adj
            )
        for v in range(n):
            if v in (s, t):
                continue
            assert pure.short_move(n, adj, s, t, v) == compiled.short_move(n, adj, s, t, v)
            assert pure.cut_move(n, adj, s, t, v) == compiled.cut_move(n, adj, s, t, v)
        mp, mc = {}, {}
        assert pure.solve_outcome(n, adj, s, t, mp) == compiled.solve_outcome(
            n, adj, s, t, mc
        )


def test_symmetric_worst_cases():
    for n in (6, 8, 9):
        complete = tuple(((1 << n) - 1) ^ (1 << v) for v in range(n))
        cycle = tuple((1 << ((v + 1) % n)) | (1 << ((v - 1) % n)) for v in range(n))
        for adj in (complete, cycle):
            assert pure.canon_graph_form(n, adj) == compiled.canon_graph_form(n, adj)
            assert pure.canon_game_form(n, adj, 0, 1) == compiled.canon_game_form(
                n, adj, 0, 1
            )


def test_memo_keys_interchangeable():
    # a memo filled by one backend must be readable by the other
    rng = random.Random(300)
    games = []
    for _ in range(50):
        n = rng.randint(3, 7)
        adj = random_graph(rng, n)
        s, t = rng.sample(range(n), 2)
        games.append((n, adj, s, t))
    memo = {}
    expected = [compiled.solve_outcome(*g, memo) for g in games]
    assert [pure.solve_outcome(*g, memo) for g in games] == expected


def test_parity_at_the_vertex_cap():
    rng = random.Random(616)
    for n in (12, 14, 16):
        for _ in range(40):
            adj = random_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            assert pure.canon_graph_key(n, adj) == compiled.canon_graph_key(n, adj)
            assert pure.canon_game_form(n, adj, s, t) == compiled.canon_game_form(
                n, adj, s, t
            )
            v = next(u for u in range(n) if u not in (s, t))
            assert pure.short_move(n, adj, s, t, v) == compiled.short_move(n, adj, s, t, v)
            assert pure.cut_move(n, adj, s, t, v) == compiled.cut_move(n, adj, s, t, v)


def test_cap_enforced():
    big = tuple([0] * 17)
    for kernel in (pure, compiled):
        with pytest.raises(ValueError):
            kernel.augment_connected_keys(16, tuple([0] * 16))
        with pytest.raises((ValueError, OverflowError)):
            kernel.canon_graph_key(17, big)
