import random

import pytest

from linkatlas import LinkGame, OutcomeClass, outcome
from linkatlas.game import Win
from linkatlas.structure import (
    apply_short_cut,
    bridge_reduce,
    bridge_reduce_info,
    capture_pair,
    dead_edges,
    expand_edge_to_bridge,
    induced_subgames,
    mutually_supporting_pairs,
    mutually_surrounding_pairs,
    mutually_threatening_pairs,
    short_cuts,
    transverse_edges,
)

from test_game_core import PATH4, S2, W1, W3, random_game


def outcome_of(move_result):
    if move_result is Win.SHORT:
        return OutcomeClass.STRONG
    if move_result is Win.CUT:
        return OutcomeClass.CUT_SECURED
    return outcome(move_result)


class TestTransverseAndDead:
    def test_path_edges_transverse(self):
        # path 2-3 hanging between the terminals' sides
        g = LinkGame.from_edges(3, [(0, 1), (1, 2)], 0, 2)
        assert transverse_edges(g) == {(0, 1), (1, 2)}

    def test_triangle_all_transverse(self):
        tri = LinkGame.from_edges(3, [(0, 1), (1, 2), (0, 2)], 0, 1)
        assert transverse_edges(tri) == {(0, 1), (1, 2), (0, 2)}

    def test_s2_none(self):
        assert transverse_edges(S2) == frozenset()

    def test_edge_across_terminal_dead(self):
        g = LinkGame.from_edges(4, [(0, 2), (0, 3), (2, 3), (2, 1), (3, 1)], 0, 1)
        assert (2, 3) in dead_edges(g)

    @pytest.mark.parametrize("g", [W1, S2, W3])
    def test_minimal_links_have_no_dead_edges(self, g):
        assert dead_edges(g) == frozenset()

    def test_interior_path_edges_dead(self):
        # terminals joined around a dangling interior path 3-4-5
        g = LinkGame.from_edges(
            6, [(0, 2), (2, 1), (2, 3), (3, 4), (4, 5)], 0, 1
        )
        dead = dead_edges(g)
        assert (4, 5) in dead and (3, 4) in dead

    def test_deleting_dead_edges_preserves_outcome(self):
        rng = random.Random(17)
        for _ in range(1000):
            g = random_game(rng, n_max=7)
            dead = dead_edges(g)
            if not dead:
                continue
            base = outcome(g)
            for edge in dead:
                assert outcome(g.delete_edge(*edge)) == base


class TestSurroundingPairs:
    def test_s2(self):
        # the terminal twins qualify too (W1 and the bridge are the known
        # both-terminal cases); the supporting set drops them
        assert mutually_surrounding_pairs(S2) == {frozenset({0, 1}), frozenset({2, 3})}
        assert mutually_supporting_pairs(S2) == {frozenset({2, 3})}

    def test_w1_empty_supporting(self):
        assert mutually_supporting_pairs(W1) == frozenset()

    def test_w3(self):
        assert mutually_supporting_pairs(W3) == {frozenset({3, 4})}

    def test_chain_has_one_pair_per_column(self):
        from linkatlas.atlas import named_link

        sc3 = named_link("SC3")
        assert len(mutually_supporting_pairs(sc3)) == 3


class TestThreateningPairs:
    def test_path_interior_pair(self):
        assert mutually_threatening_pairs(PATH4) == {frozenset({2, 3})}

    def test_w1_and_w3_empty(self):
        assert mutually_threatening_pairs(W1) == frozenset()
        assert mutually_threatening_pairs(W3) == frozenset()

    def test_cutting_both_members_preserves_outcome(self):
        from linkatlas.game import cut_vertex

        rng = random.Random(23)
        for _ in range(1000):
            g = random_game(rng, n_max=7)
            pairs = mutually_threatening_pairs(g)
            if not pairs:
                continue
            base = outcome(g)
            for pair in pairs:
                a, b = sorted(pair)
                first = cut_vertex(g, b)
                if first is Win.CUT:
                    after = OutcomeClass.CUT_SECURED
                else:
                    alive = ((1 << g.n) - 1) ^ (1 << b)
                    from linkatlas.structure import _component_mask

                    comp = _component_mask(g, g.s, alive)
                    if not (comp >> a) & 1:
                        after = outcome(first)
                    else:
                        a2 = (comp & ((1 << a) - 1)).bit_count()
                        after = outcome_of(cut_vertex(first, a2))
                assert after == base


class TestBridgeReduce:
    def test_w3_reduces_to_w1(self):
        assert bridge_reduce(W3).canonical_key == W1.canonical_key

    def test_s2_reduces_to_edge(self):
        reduced = bridge_reduce(S2)
        assert reduced.n == 2 and reduced.edge_count == 1

    def test_w1_fixed_point(self):
        assert bridge_reduce(W1) == W1

    def test_adjacent_anchors_block(self):
        g = S2.add_edge(0, 1)
        reduced, blocked = bridge_reduce_info(g)
        assert blocked and reduced.n == g.n

    def test_expansion_inverts_reduction(self):
        for edge in W1.edges():
            grown = expand_edge_to_bridge(W1, edge)
            assert bridge_reduce(grown).canonical_key == W1.canonical_key
        assert expand_edge_to_bridge(W1, (0, 2)).canonical_key == W3.canonical_key


class TestShortCuts:
    def test_w3(self):
        assert sorted(short_cuts(W3)) == [(2, 3), (2, 4)]

    def test_w1_empty(self):
        assert short_cuts(W1) == []

    def test_apply_preserves_w3(self):
        for pair in short_cuts(W3):
            assert outcome_of(apply_short_cut(W3, pair)) == OutcomeClass.WEAK

    def test_apply_rejects_non_short_cut(self):
        with pytest.raises(ValueError, match="short-cut"):
            apply_short_cut(W3, (3, 2))

    def test_strong_games_with_short_cut_stay_strong(self):
        rng = random.Random(41)
        checked = 0
        while checked < 100:
            g = random_game(rng, n_max=7)
            if outcome(g) != OutcomeClass.STRONG:
                continue
            for pair in short_cuts(g):
                assert outcome_of(apply_short_cut(g, pair)) == OutcomeClass.STRONG
            checked += 1


class TestCapture:
    def test_s2_capture_wins(self):
        assert capture_pair(S2, frozenset({2, 3})) is Win.SHORT

    def test_w3_capture_stays_weak(self):
        result = capture_pair(W3, frozenset({3, 4}))
        assert outcome_of(result) == OutcomeClass.WEAK

    def test_chain_capture_stays_strong(self):
        from linkatlas.atlas import named_link

        sc2 = named_link("SC2")
        for pair in mutually_supporting_pairs(sc2):
            assert outcome_of(capture_pair(sc2, pair)) == OutcomeClass.STRONG

    def test_rejects_non_supporting_pair(self):
        with pytest.raises(ValueError, match="supporting"):
            capture_pair(W3, frozenset({2, 3}))


class TestInducedSubgames:
    def test_w3(self):
        got = {(tuple(sorted(u)), tuple(sorted(sep))) for u, sep in induced_subgames(W3)}
        assert got == {((3, 4), (1, 2))}

    def test_w1_empty(self):
        assert induced_subgames(W1) == []

    def test_s2_no_proper_subgame(self):
        assert induced_subgames(S2) == []

    def test_component_behind_full_merge_found(self):
        # terminals 0,1; deleting them splits the play area into {2,3,4}
        # and {5}; the 3-vertex part alone is the proper subgame
        g = LinkGame.from_edges(
            6,
            [(0, 2), (0, 5), (1, 4), (1, 5), (2, 3), (3, 4), (2, 4)],
            0,
            1,
        )
        parts = {tuple(sorted(u)) for u, _ in induced_subgames(g)}
        assert (2, 3, 4) in parts
