import json

import pytest

from linkatlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_enumerate_games(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--games")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert all("," in line.split()[1] for line in lines)


def test_solve(capsys):
    from test_game_core import W3

    code, out, _ = run(capsys, "solve", "--g6", W3.to_graph6(), "--s", "0", "--t", "1")
    assert code == 0
    assert "class: Weak" in out
    assert "minimal: True" in out
    assert "pivots: 2" in out


def test_sieve_stats(capsys):
    code, out, err = run(capsys, "sieve", "--n", "5", "--stats")
    assert code == 0
    assert len(out.strip().splitlines()) == 1
    assert "# kept 1 of 21" in err


def test_search_tables_verify_roundtrip(tmp_path, capsys):
    atlas = tmp_path / "weak7.jsonl"
    code, out, _ = run(capsys, "search", "--n", "7", "--out", str(atlas))
    assert code == 0 and "5 minimal weak links" in out
    data = [json.loads(line) for line in atlas.read_text().splitlines()]
    assert "meta" in data[0] and len(data) == 6

    code, out, _ = run(capsys, "tables", "--which", "2", "--atlas", str(atlas))
    assert code == 0
    assert any(line.strip().startswith("5") for line in out.splitlines())

    code, out, _ = run(capsys, "tables", "--which", "2", "--atlas", str(atlas), "--csv")
    assert code == 0 and out.splitlines()[0].startswith("w,links")

    strong = tmp_path / "strong.jsonl"
    code, out, _ = run(capsys, "strong", "--from", str(atlas), "--out", str(strong))
    assert code == 0 and "2 minimal strong links" in out

    code, out, _ = run(capsys, "tables", "--which", "3", "--atlas", str(strong))
    assert code == 0


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--nmax", "5")
    assert code == 0
    assert "PASS oracle:agreement" in out


def test_verify_needs_atlas(capsys):
    code, _, err = run(capsys, "verify", "--suite", "invariants", "--nmax", "7")
    assert code == 2
    assert "needs weak and strong atlases" in err


def test_named(capsys):
    code, out, _ = run(capsys, "named", "--name", "SC2")
    assert code == 0
    g6, terms = out.split()
    assert terms == "0,1"


def test_named_unknown(capsys):
    code, _, err = run(capsys, "named", "--name", "XYZ")
    assert code == 2 and "unknown" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["solve", "--g6", "BW"])
    assert err.value.code == 2


def test_bad_graph6_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--g6", "~~~", "--s", "0", "--t", "1")
    assert code == 2 and "error" in err


def test_sieve_external_file(tmp_path, capsys):
    source = tmp_path / "five.g6"
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--out", str(source))
    assert code == 0
    code, out, _ = run(capsys, "sieve", "--n", "5", "--in", str(source))
    assert code == 0
    assert len(out.strip().splitlines()) == 1


def test_strong_direct(capsys):
    code, out, _ = run(capsys, "strong", "--direct", "--n", "6")
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_strong_requires_source_or_direct(capsys):
    code, _, err = run(capsys, "strong")
    assert code == 2 and "--from" in err


def test_tables_which_1(tmp_path, capsys):
    atlas = tmp_path / "weak.jsonl"
    import json

    from linkatlas import find_minimal_weak
    from linkatlas.atlas import Atlas

    records = [r for n in range(2, 6) for r in find_minimal_weak(n)]
    Atlas(records, meta={"kind": "weak", "complete_n": [2, 3, 4, 5]}).save_jsonl(atlas)
    code, out, _ = run(capsys, "tables", "--which", "1", "--nmax", "5", "--atlas", str(atlas))
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[-1].split() == ["5", "21", "98", "1", "1", "0"]


def test_verify_tables_suite(tmp_path, capsys):
    from linkatlas import find_minimal_weak
    from linkatlas.atlas import Atlas
    from linkatlas.search import derive_minimal_strong

    records = [r for n in range(2, 8) for r in find_minimal_weak(n)]
    weak = tmp_path / "weak.jsonl"
    Atlas(records, meta={"kind": "weak", "complete_n": list(range(2, 8))}).save_jsonl(weak)
    strong = tmp_path / "strong.jsonl"
    Atlas(derive_minimal_strong(records)).save_jsonl(strong)
    code, out, _ = run(
        capsys, "verify", "--suite", "tables", "--nmax", "7",
        "--atlas", str(weak), "--strong-atlas", str(strong),
    )
    assert code == 0
    assert "FAIL" not in out


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendix", "--nmax", "6")
    assert code == 0
    assert "no-weight-2-weak-links" in out and "no-weight-4-weak-links" in out
