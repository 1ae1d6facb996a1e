"""Graph enumeration, game streams, and the minimal-link search pipeline.

Connected graphs are generated level by level: every connected graph on n
vertices arises from a connected graph on n-1 by joining a new vertex to a
nonempty subset, and canonical keys deduplicate the results.  Work is
chunked over graph keys; each worker owns its chunk end to end and results
merge by canonical key, so runs are deterministic at any job count.
"""

from __future__ import annotations

import multiprocessing
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from . import graph6
from .atlas import LinkRecord, build_link_record
from .backend import CAP, kernel
from .game import LinkGame
from .sieve import _degree_bounds_failure, sieve
from .solver import OutcomeClass, is_minimal

Graph = tuple[int, tuple[int, ...]]


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get("ATLAS_JOBS", "").strip()
        jobs = int(env) if env else (os.cpu_count() or 1)
    return max(1, jobs)


def _chunks(items: list, k: int) -> list[list]:
    if not items:
        return []
    k = min(k, len(items))
    size = (len(items) + k - 1) // k
    return [items[i : i + size] for i in range(0, len(items), size)]


def _pool_map(fn, work, jobs: int):
    if jobs <= 1 or len(work) <= 1:
        return [fn(w) for w in work]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(min(jobs, len(work))) as pool:
        return pool.map(fn, work)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class GraphStream:
    """Ordered, duplicate-free source of canonical connected graphs."""

    n: int
    keys: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[Graph]:
        for key in self.keys:
            yield kernel.key_to_graph(key)

    def chunks(self, k: int) -> list[list[bytes]]:
        return _chunks(list(self.keys), k)


_CONNECTED_CACHE: dict[int, tuple[bytes, ...]] = {}
_ALL_CACHE: dict[int, tuple[bytes, ...]] = {}


def _augment_chunk(keys: list[bytes]) -> set[bytes]:
    out: set[bytes] = set()
    for key in keys:
        n, adj = kernel.key_to_graph(key)
        out |= kernel.augment_connected_keys(n, adj)
    return out


def connected_graphs(n: int, jobs: int | None = None) -> GraphStream:
    """One canonical representative per connected graph on n vertices."""
    if not 1 <= n <= CAP:
        raise ValueError(f"vertex count must be in 1..{CAP}")
    jobs = resolve_jobs(jobs)
    for m in range(1, n + 1):
        if m in _CONNECTED_CACHE:
            continue
        if m == 1:
            _CONNECTED_CACHE[1] = (kernel.canon_graph_key(1, (0,)),)
            continue
        parents = list(_CONNECTED_CACHE[m - 1])
        children: set[bytes] = set()
        for part in _pool_map(_augment_chunk, _chunks(parents, jobs * 4), jobs):
            children |= part
        _CONNECTED_CACHE[m] = tuple(sorted(children))
    return GraphStream(n, _CONNECTED_CACHE[n])


def _augment_all_chunk(keys: list[bytes]) -> set[bytes]:
    out: set[bytes] = set()
    for key in keys:
        n, adj = kernel.key_to_graph(key)
        out |= kernel.augment_connected_keys(n, adj)
        out.add(kernel.canon_graph_key(n + 1, adj + (0,)))
    return out


def all_graphs(n: int, jobs: int | None = None) -> GraphStream:
    """Every graph on n vertices, disconnected ones included."""
    if not 1 <= n <= CAP:
        raise ValueError(f"vertex count must be in 1..{CAP}")
    jobs = resolve_jobs(jobs)
    for m in range(1, n + 1):
        if m in _ALL_CACHE:
            continue
        if m == 1:
            _ALL_CACHE[1] = (kernel.canon_graph_key(1, (0,)),)
            continue
        parents = list(_ALL_CACHE[m - 1])
        children: set[bytes] = set()
        for part in _pool_map(_augment_all_chunk, _chunks(parents, jobs * 4), jobs):
            children |= part
    # note: parents already cover n-1; adding an isolated vertex keeps
    # disconnected classes, the nonempty subsets the rest
        _ALL_CACHE[m] = tuple(sorted(children))
    return GraphStream(n, _ALL_CACHE[n])


def _orbit_count_chunk(keys: list[bytes]) -> int:
    total = 0
    for key in keys:
        n, adj = kernel.key_to_graph(key)
        total += kernel.pair_orbit_count(n, adj)
    return total


def count_shannon_games(n: int, jobs: int | None = None) -> int:
    """Number of non-isomorphic games (connected graph, unordered pair)."""
    if n < 2:
        return 0
    jobs = resolve_jobs(jobs)
    stream = connected_graphs(n, jobs)
    return sum(_pool_map(_orbit_count_chunk, stream.chunks(jobs * 4), jobs))


def iter_shannon_games(n: int) -> Iterator[LinkGame]:
    """One representative LinkGame per isomorphism class, in stream order."""
    for gn, adj in connected_graphs(n):
        for s, t in kernel.pair_orbit_reps(gn, adj):
            yield LinkGame(gn, adj, s, t)


def shannon_games(n: int, jobs: int | None = None) -> tuple[int, Iterator[LinkGame]]:
    """Count and stream of all games of size n (the count is a separate
    counting pass; iterate the stream when only representatives matter)."""
    return count_shannon_games(n, jobs), iter_shannon_games(n)


def sieve_counts(n: int, jobs: int | None = None) -> tuple[int, Counter]:
    """Sieve every connected graph of size n: (kept count, discard tally)."""
    jobs = resolve_jobs(jobs)
    stream = connected_graphs(n, jobs)
    kept = 0
    tally: Counter = Counter()
    for part_kept, part_tally in _pool_map(
        _sieve_count_chunk, [(n, c) for c in stream.chunks(jobs * 4)], jobs
    ):
        kept += part_kept
        tally.update(part_tally)
    return kept, tally


def _sieve_count_chunk(args) -> tuple[int, Counter]:
    n, keys = args
    kept = 0
    tally: Counter = Counter()
    for key in keys:
        _, adj = kernel.key_to_graph(key)
        verdict = sieve(n, adj)
        if verdict.keep:
            kept += 1
        else:
            tally[verdict.failed_condition] += 1
    return kept, tally


# ---------------------------------------------------------------------------
# minimal weak link search


def _candidate_games_direct(n: int, adj) -> list[tuple[int, int]]:
    return kernel.pair_orbit_reps(n, adj)


def _candidate_games_sieved(n: int, adj) -> list[tuple[int, int]]:
    verdict = sieve(n, adj)
    if not verdict.keep:
        return []
    seen = set()
    reps = []
    for s, t in verdict.candidate_terminal_pairs:
        key = kernel.canon_game_key(n, adj, s, t)
        if key not in seen:
            seen.add(key)
            reps.append((s, t))
    return reps


def _weak_chunk(args) -> list[LinkRecord]:
    n, keys, sieved = args
    memo: dict = {}
    out = []
    pick = _candidate_games_sieved if sieved else _candidate_games_direct
    for key in keys:
        _, adj = kernel.key_to_graph(key)
        for s, t in pick(n, adj):
            g = LinkGame(n, adj, s, t)
            if kernel.solve_outcome(n, adj, s, t, memo) != OutcomeClass.WEAK:
                continue
            if is_minimal(g, memo):
                out.append(build_link_record(g, memo))
    return out


def _merge_records(parts) -> list[LinkRecord]:
    by_key: dict[bytes, LinkRecord] = {}
    for part in parts:
        for rec in part:
            by_key[rec.key] = rec
    return [by_key[k] for k in sorted(by_key)]


def find_minimal_weak(
    n: int,
    mode: str = "sieved",
    jobs: int | None = None,
    checkpoint: str | os.PathLike | None = None,
    progress: bool = False,
) -> list[LinkRecord]:
    """The complete set of minimal weak links of size n, canonically
    deduplicated and sorted by canonical key.

    ``direct`` solves every game (cross-validation path, practical to n=8);
    ``sieved`` filters graphs and terminal pairs first; ``incremental11``
    runs the two-stage augmentation construction (n=11 only, long-running).
    """
    if not 2 <= n <= CAP:
        raise ValueError(f"size must be in 2..{CAP}")
    if mode == "incremental11":
        if n != 11:
            raise ValueError("incremental11 mode applies to n=11 only")
        return _find_weak_incremental11(jobs, checkpoint, progress)
    if mode not in ("direct", "sieved"):
        raise ValueError(f"unknown search mode {mode!r}")
    jobs = resolve_jobs(jobs)
    stream = connected_graphs(n, jobs)
    work = [(n, c, mode == "sieved") for c in stream.chunks(jobs * 4)]
    if checkpoint is not None:
        parts = _checkpointed(_weak_chunk, work, Path(checkpoint), f"weak{n}", jobs, progress)
    else:
        parts = _pool_map(_weak_chunk, work, jobs)
    return _merge_records(parts)


# ---------------------------------------------------------------------------
# strong links


class DerivationIntegrityError(RuntimeError):
    """A pendant-derived candidate failed Strong or minimality verification,
    which signals a pipeline bug upstream."""


def derive_minimal_strong(weak_records: list[LinkRecord]) -> list[LinkRecord]:
    """Minimal strong links of weight w from the complete minimal-weak set
    of weight w+1: remove the pendant terminal, re-terminal at its
    neighbour, verify, deduplicate."""
    memo: dict = {}
    out: dict[bytes, LinkRecord] = {}
    for rec in weak_records:
        g = rec.game()
        for term in (g.s, g.t):
            if g.degree(term) != 1:
                continue
            nb = g.adj[term].bit_length() - 1
            other = g.t if term == g.s else g.s
            keep = [v for v in range(g.n) if v != term]
            index = {v: i for i, v in enumerate(keep)}
            adj = []
            for v in keep:
                row = 0
                rem = g.adj[v] & ~(1 << term)
                while rem:
                    low = rem & -rem
                    rem ^= low
                    row |= 1 << index[low.bit_length() - 1]
                adj.append(row)
            strong = LinkGame(len(keep), tuple(adj), index[nb], index[other])
            record = build_link_record(strong, memo)
            if record.cls != OutcomeClass.STRONG or not record.minimal:
                raise DerivationIntegrityError(
                    f"pendant removal from {rec.g6} gave class={record.cls.label} "
                    f"minimal={record.minimal}"
                )
            out[record.key] = record
    return [out[k] for k in sorted(out)]


def _strong_chunk(args) -> list[LinkRecord]:
    n, keys = args
    memo: dict = {}
    out = []
    for key in keys:
        _, adj = kernel.key_to_graph(key)
        for s, t in kernel.pair_orbit_reps(n, adj):
            if kernel.solve_outcome(n, adj, s, t, memo) != OutcomeClass.STRONG:
                continue
            g = LinkGame(n, adj, s, t)
            if is_minimal(g, memo):
                out.append(build_link_record(g, memo))
    return out


def find_minimal_strong_direct(n: int, jobs: int | None = None) -> list[LinkRecord]:
    """Independent cross-check of the pendant derivation: enumerate every
    game of size n and keep the minimal strong ones."""
    if not 2 <= n <= CAP:
        raise ValueError(f"size must be in 2..{CAP}")
    jobs = resolve_jobs(jobs)
    stream = connected_graphs(n, jobs)
    work = [(n, c) for c in stream.chunks(jobs * 4)]
    return _merge_records(_pool_map(_strong_chunk, work, jobs))


# ---------------------------------------------------------------------------
# bound-exception bootstrap


def discover_dmax_exception(n: int = 9, jobs: int | None = None) -> list[str]:
    """Relaxed-bound bootstrap: search size n with the d1+dn discard turned
    into a pass-through, then return the graphs of links violating the
    degree bound d_max + min(d_s, d_t) <= w - 1 (as graph6 text)."""
    jobs = resolve_jobs(jobs)
    stream = connected_graphs(n, jobs)
    memo: dict = {}
    exceptional: set[str] = set()
    for key in stream.keys:
        gn, adj = kernel.key_to_graph(key)
        degs = sorted(row.bit_count() for row in adj)
        if _degree_bounds_failure(degs, gn, apply_d1dn=False) is not None:
            continue
        if not (gn > 7 and degs[0] + degs[-1] > gn - 3):
            continue  # the normal sieve handles these; only relaxed ones matter
        for s, t in kernel.pair_orbit_reps(gn, adj):
            if kernel.solve_outcome(gn, adj, s, t, memo) != OutcomeClass.WEAK:
                continue
            g = LinkGame(gn, adj, s, t)
            if not is_minimal(g, memo):
                continue
            dmax = max(g.degree(v) for v in range(gn))
            if dmax + min(g.degree(s), g.degree(t)) > gn - 3:
                exceptional.add(graph6.encode(gn, adj))
    return sorted(exceptional)


# ---------------------------------------------------------------------------
# incremental n=11 construction (long mode)


def _stage10_chunk(args) -> set[bytes]:
    keys, = args
    from .sieve import _surrounding_pairs, _triangle_free

    out: set[bytes] = set()
    for key in keys:
        n, adj = kernel.key_to_graph(key)
        for sub in range(0, 1 << n):
            rows = list(adj)
            rem = sub
            while rem:
                low = rem & -rem
                rem ^= low
                rows[low.bit_length() - 1] |= 1 << n
            rows.append(sub)
            child = tuple(rows)
            tf = sum(_triangle_free(child, v) for v in range(n + 1))
            if tf < 2:
                continue
            if any(
                (child[u] >> v) & 1 for u, v in _surrounding_pairs(n + 1, child)
            ):
                continue
            out.add(kernel.canon_graph_key(n + 1, child))
    return out


def _stage11_chunk(args) -> list[LinkRecord]:
    from .sieve import _dmax_exemptions

    keys, = args
    memo: dict = {}
    out = []
    seen: set[bytes] = set()
    _, exempt_seqs = _dmax_exemptions()
    for key in keys:
        n, adj = kernel.key_to_graph(key)
        # the d1+dn discard may join the prefilter only while no exemption
        # graph of the target size exists (the sieve re-checks either way)
        hard_d1dn = not any(len(seq) == n + 1 for seq in exempt_seqs)
        base_degs = [row.bit_count() for row in adj]
        for sub in range(1, 1 << n):
            # degree bounds first: they reject the bulk of the candidates
            # before any canonical work
            degs = list(base_degs)
            rem = sub
            while rem:
                low = rem & -rem
                rem ^= low
                degs[low.bit_length() - 1] += 1
            degs.append(sub.bit_count())
            degs.sort()
            if _degree_bounds_failure(degs, n + 1, apply_d1dn=hard_d1dn) is not None:
                continue
            rows = list(adj)
            rem = sub
            while rem:
                low = rem & -rem
                rem ^= low
                rows[low.bit_length() - 1] |= 1 << n
            rows.append(sub)
            child = tuple(rows)
            ckey = kernel.canon_graph_key(n + 1, child)
            if ckey in seen:
                continue
            seen.add(ckey)
            cn, cadj = kernel.key_to_graph(ckey)
            for s, t in _candidate_games_sieved(cn, cadj):
                g = LinkGame(cn, cadj, s, t)
                if kernel.solve_outcome(cn, cadj, s, t, memo) != OutcomeClass.WEAK:
                    continue
                if is_minimal(g, memo):
                    out.append(build_link_record(g, memo))
    return out


def _find_weak_incremental11(
    jobs: int | None, checkpoint: str | os.PathLike | None, progress: bool
) -> list[LinkRecord]:
    jobs = resolve_jobs(jobs)
    nine = all_graphs(9, jobs)
    if progress:
        print(f"stage 1: augmenting {len(nine)} nine-vertex graphs")
    stage_work = [(c,) for c in nine.chunks(jobs * 16)]
    tens: set[bytes] = set()
    for part in _pool_map(_stage10_chunk, stage_work, jobs):
        tens |= part
    ten_keys = sorted(tens)
    if progress:
        print(f"stage 2: {len(ten_keys)} ten-vertex intermediates")
    work = [(c,) for c in _chunks(ten_keys, jobs * 64)]
    if checkpoint is not None:
        parts = _checkpointed(
            _stage11_chunk, work, Path(checkpoint), "incremental11", jobs, progress
        )
    else:
        parts = _pool_map(_stage11_chunk, work, jobs)
    return _merge_records(parts)


# ---------------------------------------------------------------------------
# checkpointing


def _checkpointed(fn, work, directory: Path, tag: str, jobs: int, progress: bool):
    """Run chunked work with per-chunk JSONL shards; finished shards are
    skipped on resume."""
    directory.mkdir(parents=True, exist_ok=True)
    parts = []
    pending = []
    for i, item in enumerate(work):
        shard = directory / f"{tag}-{i:05d}.jsonl"
        if shard.exists():
            parts.append([LinkRecord.from_json(line) for line in shard.read_text().splitlines() if line])
        else:
            pending.append((i, item, shard))
    if progress and parts:
        print(f"resumed {len(parts)} finished shards from {directory}")
    for batch in _chunks(pending, max(1, len(pending) // max(1, jobs))):
        results = _pool_map(fn, [item for _, item, _ in batch], jobs)
        for (i, _, shard), records in zip(batch, results):
            tmp = shard.with_suffix(".tmp")
            tmp.write_text("".join(r.to_json() + "\n" for r in records))
            tmp.rename(shard)
            parts.append(records)
            if progress:
                print(f"shard {i} done: {len(records)} records")
    return parts


def write_graph6_file(stream: GraphStream, path, games: bool = False) -> int:
    """Dump a stream as graph6 lines; with ``games`` one line per terminal
    orbit with the pair appended."""
    count = 0
    with open(path, "w") as fh:
        for n, adj in stream:
            text = graph6.encode(n, adj)
            if games:
                for s, t in kernel.pair_orbit_reps(n, adj):
                    fh.write(f"{text} {s},{t}\n")
                    count += 1
            else:
                fh.write(text + "\n")
                count += 1
    return count


def load_graph6_stream(path, n: int | None = None) -> GraphStream:
    """Build a stream from an external graph6 file (one graph per line),
    re-canonicalizing and deduplicating."""
    keys = set()
    sizes = set()
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith(">>"):
                continue
            gn, adj = graph6.decode(line)
            if n is not None and gn != n:
                raise ValueError(f"expected graphs of size {n}, found {gn}")
            sizes.add(gn)
            keys.add(kernel.canon_graph_key(gn, adj))
    if not keys:
        raise ValueError(f"no graphs found in {path}")
    if len(sizes) > 1:
        raise ValueError(f"mixed graph sizes in {path}: {sorted(sizes)}")
    return GraphStream(sizes.pop(), tuple(sorted(keys)))
