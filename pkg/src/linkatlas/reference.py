"""Reference statistics the verification suites reproduce.

Values are the package's advertised reproduction targets; ``None`` marks
cells that are approximate or contested in the reference data and therefore
reported but not gated.
"""

from __future__ import annotations

# per size n: (connected graphs, games, sieved graphs, minimal weak links,
# Shannon-irreducible weak links)
TABLE1: dict[int, tuple[int | None, int | None, int | None, int, int]] = {
    2: (1, 1, 0, 0, 0),
    3: (2, 3, 1, 1, 1),
    4: (6, 16, 0, 0, 0),
    5: (21, 98, 1, 1, 0),
    6: (112, 879, 0, 0, 0),
    7: (853, 11260, 9, 5, 1),
    8: (11117, 230505, 35, 0, 0),
    9: (261080, 7949596, 737, 36, 8),
    10: (11716571, None, 21523, 24, 7),
    11: (1006700565, None, None, 953, 312),
}

# exact sieved-count column entries treated as soft targets (reported, not
# gated): the threat test's strength can shift retained counts while the
# minimal-link column must still match exactly
TABLE1_SIEVED_SOFT = {3: 1, 5: 1, 7: 9, 8: 35, 9: 737}

# per weight w: (links, p_min, E_min, E_max, dmax_min, dmax_max,
#                S_irr, P_irr, T_irr, SPT_irr)
# The w=1 S cell is contested between the reference tables (the per-size
# table counts W1 as Shannon-irreducible, the per-weight table does not);
# it is emitted blank and its SPT census cell follows the per-weight table.
TABLE2_WEAK: dict[int, tuple] = {
    1: (1, None, 2, 2, 2, 2, None, 1, 1, 0),
    3: (1, 0, 5, 5, 3, 3, 0, 0, 0, 0),
    5: (5, 1, 8, 9, 3, 4, 1, 1, 2, 0),
    7: (36, 2, 11, 13, 3, 5, 8, 8, 20, 2),
    8: (24, 3, 14, 16, 4, 5, 7, 24, 24, 7),
    9: (953, 3, 14, 21, 3, 6, 312, 544, 766, 208),
}

TABLE3_STRONG: dict[int, tuple] = {
    0: (1, None, 1, 1, 1, 1, 1, 1, 1, 1),
    2: (1, None, 4, 4, 2, 2, 0, 0, 1, 0),
    4: (2, 0, 7, 8, 3, 3, 1, 0, 1, 0),
    6: (14, 0, 10, 12, 3, 4, 4, 2, 6, 0),
    7: (10, 1, 13, 15, 4, 5, 10, 10, 5, 5),
    8: (304, 1, 13, 20, 3, 6, 196, 163, 204, 120),
}

# weight-7 weak-link census: 28 of 36 are S-reducible; the 8 S-irreducible
# split into P-only, T-only, PT and fully irreducible
WEIGHT7_CENSUS = {
    "s_reducible": 28,
    "s_irreducible": 8,
    "p_only": 2,
    "t_only": 3,
    "pt": 1,
    "spt_irreducible": 2,
    "graphs_with_two_links": 1,
}

# weight-8 weak-link census (long mode, n=10)
WEIGHT8_CENSUS = {
    "links": 24,
    "p_reducible": 0,
    "t_reducible": 0,
    "s_reducible": 17,
    "s_irreducible": 7,
    "s_reducible_triangles": {0: 3, 2: 14},
    "s_irreducible_triangles": {0: 3, 1: 4},
}

# chains: SC(k) is strong with d_max 2, 3, 4 for k = 1, 2, >= 3 and terminal
# distance k + 1; the pendant-augmented chain is weak of weight 2k + 1 with
# terminal distance k + 2
CHAIN_DMAX = {1: 2, 2: 3}
CHAIN_DMAX_HIGH = 4

# maximum terminal distance over weak links with w <= 9 and d_max = 3
MAX_WEAK_DISTANCE_DMAX3 = 4

# graph6 strings of graphs exempt from the d_1 + d_n <= n - 3 sieve bound:
# the single known exception link's underlying graph, discovered by
# search.discover_dmax_exception(9) (a relaxed-bound bootstrap run) and
# re-verified by the acceptance invariants suite.
DMAX_EXCEPTION_G6: tuple[str, ...] = ("H??HeJw",)
