"""Acceptance gate: reproduces the reference statistics at desk scale.

One test per criterion, each printing a pass/fail line (run pytest with -s
or -rA to see them).  The single contested cell, the weight-6 strong-link
count, is asserted against the published value in its own test and is
expected to fail; see the analysis in the project notes: this build finds 13
links whose every other published statistic (edge ranges, degree ranges,
centre sizes, all four irreducibility counts, both figure inventories)
matches exactly, via two independent routes cross-checked by a third
brute-force oracle.
"""

import pytest

from linkatlas import (
    OutcomeClass,
    connected_graphs,
    count_shannon_games,
    find_minimal_strong_direct,
    find_minimal_weak,
)
from linkatlas import reference
from linkatlas.atlas import Atlas
from linkatlas.search import sieve_counts
from linkatlas.tables import table2_rows, table3_rows
from linkatlas.verify import (
    run_appendix_suite,
    run_invariants_suite,
    run_oracle_suite,
    run_section5_suite,
)


def report(name: str, ok: bool, detail: str = ""):
    print(f"{'PASS' if ok else 'FAIL'} acceptance:{name} {detail}".rstrip())
    return ok


@pytest.fixture(scope="module")
def direct_weak():
    return {n: find_minimal_weak(n, mode="direct") for n in range(2, 9)}


@pytest.fixture(scope="module")
def strong_direct():
    return {n: find_minimal_strong_direct(n) for n in range(2, 9)}


def test_criterion1_table1_exact(weak_atlas9):
    """Connected graphs, games and minimal-weak counts for n <= 9, exact."""
    ok = True
    for n in range(2, 10):
        connected, games, _, minimal, _ = reference.TABLE1[n]
        got_connected = len(connected_graphs(n))
        got_games = count_shannon_games(n)
        got_minimal = len(weak_atlas9.by_size(n))
        ok &= report(f"table1-n{n}-connected", got_connected == connected, str(got_connected))
        ok &= report(f"table1-n{n}-games", got_games == games, str(got_games))
        ok &= report(f"table1-n{n}-minimal-weak", got_minimal == minimal, str(got_minimal))
    assert ok


def test_criterion2_sieve_soundness(direct_weak, weak_atlas9):
    """Direct and sieved searches agree exactly for all n <= 8; sieved
    retention counts are reported as soft targets."""
    ok = True
    for n in range(2, 9):
        direct_keys = {r.key for r in direct_weak[n]}
        sieved_keys = {r.key for r in weak_atlas9.by_size(n)}
        ok &= report(
            f"sieve-equals-direct-n{n}",
            direct_keys == sieved_keys,
            f"{len(direct_keys)} links",
        )
    for n, soft in reference.TABLE1_SIEVED_SOFT.items():
        kept, _ = sieve_counts(n)
        print(f"INFO acceptance:sieved-count-n{n} retained {kept} (reference {soft}, soft)")
    assert ok


def test_criterion3_table2_rows(weak_atlas9):
    """Per-weight weak-link rows for w in {1, 3, 5, 7}, exact."""
    rows = {r.w: r for r in table2_rows(weak_atlas9, [1, 3, 5, 7])}
    ok = True
    for w, row in rows.items():
        want = reference.TABLE2_WEAK[w][:1] + reference.TABLE2_WEAK[w][1:]
        got = (row.links,) + row.cells()[1:]
        # compare cell-wise, skipping reference cells marked None
        cells_ok = all(
            g == e for g, e in zip(got, want[:len(got)]) if e is not None
        )
        ok &= report(f"table2-w{w}", cells_ok, f"{got}")
    assert ok


def test_criterion4_table3_derivation_equals_direct(weak_atlas9, strong_atlas9, strong_direct):
    """Pendant derivation and direct search must produce identical strong
    sets for every weight w <= 6."""
    ok = True
    derived_by_n = {n: {r.key for r in strong_atlas9.by_size(n)} for n in strong_atlas9.sizes()}
    for n in range(2, 9):
        derived = derived_by_n.get(n, set())
        direct = {r.key for r in strong_direct[n]}
        ok &= report(
            f"strong-derived-equals-direct-n{n}", derived == direct, f"{len(direct)} links"
        )
    assert ok


def test_criterion4_table3_rows_w_le_4(strong_atlas9):
    """Strong-link rows for w in {0, 2, 4}, exact."""
    rows = {r.w: r for r in table3_rows(strong_atlas9, [0, 2, 4])}
    ok = True
    for w, row in rows.items():
        want = reference.TABLE3_STRONG[w]
        cells_ok = all(
            g == e for g, e in zip(row.cells(), want) if e is not None
        )
        ok &= report(f"table3-w{w}", cells_ok, f"{row.cells()}")
    assert ok


def test_criterion4_table3_w6_row_published_count(strong_atlas9):
    """The published weight-6 row claims 14 links; this build finds 13.

    Asserted faithfully and expected red: both search routes, the brute-force
    oracle, and every other published statistic of the row (including the
    four-link irreducible figure inventory) agree on the 13-link set.  See
    the w=6 analysis in the project notes.
    """
    row = table3_rows(strong_atlas9, [6])[0]
    want = reference.TABLE3_STRONG[6]
    report("table3-w6-other-cells", row.cells()[1:] == want[1:], f"{row.cells()[1:]}")
    assert row.cells()[1:] == want[1:]
    report("table3-w6-links", row.links == want[0], f"{row.links} (published {want[0]})")
    assert row.links == want[0], (
        f"found {row.links} weight-6 minimal strong links; the published "
        f"count is {want[0]} (unreproducible; see notes)"
    )


def test_criterion5_appendix_no_even_weights():
    """Exhaustively zero minimal weak links at n = 4, 6, 8."""
    suite = run_appendix_suite(8)
    for name, status, detail in suite.lines:
        report(name, status != "FAIL", detail)
    assert suite.ok


def test_criterion6_oracle_equivalence():
    """Optimized solver equals the brute-force oracle on all 997 games."""
    suite = run_oracle_suite(6)
    for name, status, detail in suite.lines:
        report(name, status != "FAIL", detail)
    assert suite.ok
    assert "997/997" in suite.lines[0][2]


def test_criterion7_property_suites(weak_atlas9, strong_atlas9):
    """Structural theorems and reductions over the full n <= 9 atlas."""
    suite = run_invariants_suite(weak_atlas9, strong_atlas9, 9)
    for name, status, detail in suite.lines:
        if status != "INFO":
            report(name, status != "FAIL", detail)
        else:
            print(f"INFO acceptance:{name} {detail}")
    assert suite.ok


def test_criterion8_section5_facts(weak_atlas9, strong_atlas9):
    """Chain constructions and the degree/distance facts."""
    suite = run_section5_suite(weak_atlas9, strong_atlas9, 9)
    for name, status, detail in suite.lines:
        report(name, status != "FAIL", detail)
    assert suite.ok


def test_degree_bound_exception_bootstrap():
    """The relaxed-bound bootstrap rediscovers exactly the frozen exception
    graph that the sieve exempts from the d1+dn discard."""
    from linkatlas import graph6
    from linkatlas.backend import kernel
    from linkatlas.search import discover_dmax_exception

    found = discover_dmax_exception(9)
    got = {kernel.canon_graph_key(*graph6.decode(t)) for t in found}
    want = {kernel.canon_graph_key(*graph6.decode(t)) for t in reference.DMAX_EXCEPTION_G6}
    report("dmax-exception-bootstrap", got == want, f"{found}")
    assert got == want


def test_atlas_round_trip_integrity(weak_atlas9, strong_atlas9, tmp_path):
    """Every record re-solves from its serialized form to the stored class."""
    for atlas, name in ((weak_atlas9, "weak"), (strong_atlas9, "strong")):
        path = tmp_path / f"{name}.jsonl"
        atlas.save_jsonl(path)
        loaded = Atlas.load_jsonl(path)
        problems = loaded.validate()
        report(f"round-trip-{name}", not problems, "; ".join(problems[:3]))
        assert not problems
        for rec in loaded:
            assert rec.cls in (OutcomeClass.WEAK, OutcomeClass.STRONG)
            assert rec.minimal
