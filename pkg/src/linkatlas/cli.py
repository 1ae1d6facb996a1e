"""Command-line surface: enumerate, sieve, solve, search, strong, tables,
verify, named.

Exit status: 0 on success, 1 on a verification mismatch, 2 on usage errors.
ATLAS_JOBS sets the default worker count.
"""

from __future__ import annotations

import argparse
import sys

from . import graph6
from .atlas import Atlas, NamedLinkError, named_link
from .backend import kernel
from .game import LinkGame
from .solver import is_minimal, outcome, OutcomeClass, pivots


def _add_jobs(parser):
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: ATLAS_JOBS or CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkatlas",
        description="Minimal weak and strong links in the Shannon vertex game",
    )
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="connected graphs (or games) as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--games", action="store_true", help="append terminal pair per orbit")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    _add_jobs(p)

    p = sub.add_parser("sieve", help="retained graph6 lines after the sieve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", default=None, help="external graph6 file to sieve")
    p.add_argument("--stats", action="store_true", help="print per-condition discard counts")
    p.add_argument("--out", default=None)
    _add_jobs(p)

    p = sub.add_parser("solve", help="classify one game")
    p.add_argument("--g6", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("search", help="find all minimal weak links of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["direct", "sieved", "incremental11"], default="sieved")
    p.add_argument("--checkpoint", default=None, help="directory for resumable shards")
    p.add_argument("--out", required=True, help="atlas JSONL path")
    _add_jobs(p)

    p = sub.add_parser("strong", help="minimal strong links, derived or direct")
    p.add_argument("--from", dest="source", default=None, help="weak atlas JSONL")
    p.add_argument("--direct", action="store_true", help="direct search instead")
    p.add_argument("--n", type=int, default=None, help="size for --direct")
    p.add_argument("--out", default=None)
    _add_jobs(p)

    p = sub.add_parser("tables", help="reproduce a statistics table")
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--atlas", required=True, help="weak atlas (tables 1/2) or strong atlas (table 3)")
    p.add_argument("--csv", action="store_true")
    _add_jobs(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["oracle", "invariants", "appendix", "tables"], required=True)
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--atlas", default=None, help="weak atlas JSONL (atlas-based suites)")
    p.add_argument("--strong-atlas", default=None, help="strong atlas JSONL")
    _add_jobs(p)

    p = sub.add_parser("named", help="print a named link as graph6 + terminals")
    p.add_argument("--name", required=True)
    p.add_argument("--atlas", default=None, help="weak atlas for atlas-resolved names")
    return parser


def _emit(lines, out):
    if out is None:
        for line in lines:
            print(line)
    else:
        with open(out, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))


def cmd_enumerate(args) -> int:
    from .search import connected_graphs

    stream = connected_graphs(args.n, args.jobs)
    lines = []
    for n, adj in stream:
        text = graph6.encode(n, adj)
        if args.games:
            for s, t in kernel.pair_orbit_reps(n, adj):
                lines.append(f"{text} {s},{t}")
        else:
            lines.append(text)
    _emit(lines, args.out)
    return 0


def cmd_sieve(args) -> int:
    from .search import connected_graphs, load_graph6_stream
    from .sieve import sieve

    if args.infile:
        stream = load_graph6_stream(args.infile, args.n)
    else:
        stream = connected_graphs(args.n, args.jobs)
    kept_lines = []
    tally: dict[str, int] = {}
    for n, adj in stream:
        verdict = sieve(n, adj)
        if verdict.keep:
            kept_lines.append(graph6.encode(n, adj))
        else:
            tally[verdict.failed_condition] = tally.get(verdict.failed_condition, 0) + 1
    _emit(kept_lines, args.out)
    if args.stats:
        print(f"# kept {len(kept_lines)} of {len(stream)}", file=sys.stderr)
        for cond in sorted(tally):
            print(f"# {cond}: {tally[cond]}", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    g = LinkGame.from_graph6(args.g6, args.s, args.t)
    cls = outcome(g)
    minimal = is_minimal(g)
    piv = sorted(pivots(g)) if cls == OutcomeClass.WEAK else []
    print(f"class: {cls.label}")
    print(f"minimal: {minimal}")
    print(f"pivots: {','.join(map(str, piv)) if piv else '-'}")
    return 0


def cmd_search(args) -> int:
    from .search import find_minimal_weak

    records = find_minimal_weak(
        args.n, mode=args.mode, jobs=args.jobs, checkpoint=args.checkpoint, progress=True
    )
    atlas = Atlas(records, meta={"kind": "weak", "mode": args.mode, "complete_n": [args.n]})
    atlas.save_jsonl(args.out)
    print(f"{len(records)} minimal weak links of size {args.n} -> {args.out}")
    return 0


def cmd_strong(args) -> int:
    from .search import derive_minimal_strong, find_minimal_strong_direct

    if args.direct:
        if args.n is None:
            print("strong --direct requires --n", file=sys.stderr)
            return 2
        records = find_minimal_strong_direct(args.n, args.jobs)
        meta = {"kind": "strong", "mode": "direct", "complete_n": [args.n]}
    else:
        if not args.source:
            print("strong requires --from ATLAS or --direct --n N", file=sys.stderr)
            return 2
        weak = Atlas.load_jsonl(args.source)
        records = derive_minimal_strong(weak.records())
        meta = {
            "kind": "strong",
            "mode": "derived",
            "complete_n": sorted({r.n for r in records}),
        }
    if args.out:
        Atlas(records, meta=meta).save_jsonl(args.out)
        print(f"{len(records)} minimal strong links -> {args.out}")
    else:
        for rec in records:
            print(rec.to_json())
    return 0


def cmd_tables(args) -> int:
    from .tables import render_csv, render_text, table_stats

    atlas = Atlas.load_jsonl(args.atlas)
    rows = table_stats(atlas, args.which, args.nmax, args.jobs)
    print(render_csv(rows) if args.csv else render_text(rows))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verification

    weak = Atlas.load_jsonl(args.atlas) if args.atlas else None
    strong = Atlas.load_jsonl(args.strong_atlas) if args.strong_atlas else None
    try:
        report = run_verification(
            args.suite, args.nmax, weak_atlas=weak, strong_atlas=strong, jobs=args.jobs
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(report.render())
    return 0 if report.ok else 1


def cmd_named(args) -> int:
    atlas = Atlas.load_jsonl(args.atlas) if args.atlas else None
    try:
        g = named_link(args.name, atlas)
    except NamedLinkError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"{g.to_graph6()} {g.s},{g.t}")
    return 0


_HANDLERS = {
    "enumerate": cmd_enumerate,
    "sieve": cmd_sieve,
    "solve": cmd_solve,
    "search": cmd_search,
    "strong": cmd_strong,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "named": cmd_named,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
