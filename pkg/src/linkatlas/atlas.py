"""Atlas records: canonical serialized links with classification, JSONL
persistence, and named-link constructors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import graph6, structure
from .game import LinkGame, LinkSummary, summarize
from .solver import OutcomeClass, is_minimal, outcome, pivots

TOOL_VERSION = "linkatlas 0.1.0"


def classify_reducibility(g: LinkGame) -> dict[str, bool]:
    """Reducibility flags of a minimal link.

    S: induces a proper smaller Shannon game, or bridge-reduction shrinks it;
    P: has a mutually supporting pair; T: has a short-cut.
    """
    reduced, _ = structure.bridge_reduce_info(g)
    return {
        "S": bool(structure.induced_subgames(g)) or reduced.n < g.n,
        "P": bool(structure.mutually_supporting_pairs(g)),
        "T": bool(structure.short_cuts(g)),
    }


@dataclass(frozen=True)
class LinkRecord:
    """One atlas row: a canonically labelled link plus its classification."""

    n: int
    w: int
    g6: str
    terminals: tuple[int, int]
    cls: OutcomeClass
    minimal: bool
    pivots: tuple[int, ...]
    flags: dict[str, bool]
    summary: LinkSummary
    key: bytes = field(compare=False, repr=False)

    def game(self) -> LinkGame:
        gn, adj = graph6.decode(self.g6)
        return LinkGame(gn, adj, *self.terminals)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "w": self.w,
                "g6": self.g6,
                "terminals": list(self.terminals),
                "class": self.cls.label,
                "minimal": self.minimal,
                "pivots": list(self.pivots),
                "flags": self.flags,
                "summary": self.summary.as_dict(),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> "LinkRecord":
        data = json.loads(line)
        game = LinkGame(
            *graph6.decode(data["g6"]), data["terminals"][0], data["terminals"][1]
        )
        return cls(
            n=data["n"],
            w=data["w"],
            g6=data["g6"],
            terminals=tuple(data["terminals"]),
            cls=OutcomeClass.from_label(data["class"]),
            minimal=data["minimal"],
            pivots=tuple(data["pivots"]),
            flags={k: bool(v) for k, v in data["flags"].items()},
            summary=LinkSummary(**data["summary"]),
            key=game.canonical_key,
        )


def build_link_record(g: LinkGame, memo: dict | None = None) -> LinkRecord:
    """Classify a game and store it in canonical labelling (terminals 0, 1)."""
    key, canon = g.canonical_form()
    cls = outcome(canon, memo)
    piv: tuple[int, ...] = ()
    if cls == OutcomeClass.WEAK:
        piv = tuple(sorted(pivots(canon, memo)))
    return LinkRecord(
        n=canon.n,
        w=canon.n - 2,
        g6=canon.to_graph6(),
        terminals=(canon.s, canon.t),
        cls=cls,
        minimal=is_minimal(canon, memo),
        pivots=piv,
        flags=classify_reducibility(canon),
        summary=summarize(canon),
        key=key,
    )


class AtlasError(RuntimeError):
    pass


class Atlas:
    """A collection of link records keyed by canonical identity."""

    def __init__(self, records=(), meta: dict | None = None):
        self._by_key: dict[bytes, LinkRecord] = {}
        self.meta: dict = meta or {}
        for rec in records:
            self.add(rec)

    def add(self, rec: LinkRecord) -> None:
        self._by_key[rec.key] = rec

    def __len__(self) -> int:
        return len(self._by_key)

    def __iter__(self):
        return iter(self.records())

    def __contains__(self, key: bytes) -> bool:
        return key in self._by_key

    def get(self, key: bytes) -> LinkRecord | None:
        return self._by_key.get(key)

    def records(self) -> list[LinkRecord]:
        return [self._by_key[k] for k in sorted(self._by_key, key=lambda k: (k[1], k))]

    def sizes(self) -> list[int]:
        return sorted({rec.n for rec in self._by_key.values()})

    def by_size(self, n: int) -> list[LinkRecord]:
        return [rec for rec in self.records() if rec.n == n]

    def by_weight(self, w: int) -> list[LinkRecord]:
        return [rec for rec in self.records() if rec.w == w]

    def weights(self) -> list[int]:
        return sorted({rec.w for rec in self._by_key.values()})

    def require_sizes(self, sizes) -> None:
        has = set(self.meta.get("complete_n", self.sizes()))
        missing = [n for n in sizes if n not in has]
        if missing:
            raise AtlasError(f"atlas incomplete: missing sizes {missing}")

    # -- persistence --------------------------------------------------------

    def save_jsonl(self, path) -> None:
        path = Path(path)
        meta = dict(self.meta)
        meta.setdefault("tool", TOOL_VERSION)
        meta["records"] = len(self)
        with open(path, "w") as fh:
            fh.write(json.dumps({"meta": meta}, separators=(",", ":")) + "\n")
            for rec in self.records():
                fh.write(rec.to_json() + "\n")

    @classmethod
    def load_jsonl(cls, path) -> "Atlas":
        atlas = cls()
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                data = json.loads(line)
                if "meta" in data:
                    atlas.meta = data["meta"]
                    continue
                atlas.add(LinkRecord.from_json(line))
        return atlas

    def validate(self, memo: dict | None = None) -> list[str]:
        """Round-trip integrity: every record re-solves to its stored class,
        stays minimal, and reproduces its canonical identity."""
        problems = []
        for rec in self.records():
            g = rec.game()
            if g.canonical_key != rec.key:
                problems.append(f"{rec.g6}: canonical key mismatch")
            if outcome(g, memo) != rec.cls:
                problems.append(f"{rec.g6}: stored class {rec.cls.label} wrong")
            if is_minimal(g, memo) != rec.minimal:
                problems.append(f"{rec.g6}: minimality flag wrong")
            if classify_reducibility(g) != rec.flags:
                problems.append(f"{rec.g6}: reducibility flags wrong")
        return problems


# ---------------------------------------------------------------------------
# named links


def _chain(k: int) -> LinkGame:
    # two rails of k columns with forward diagonals; terminals at the ends
    n = 2 * k + 2
    s, t = 0, 1
    edges = []
    for i in range(k):
        top, bot = 2 + 2 * i, 3 + 2 * i
        if i == 0:
            edges += [(s, top), (s, bot)]
        else:
            ptop, pbot = top - 2, bot - 2
            edges += [(ptop, top), (pbot, bot), (ptop, bot), (pbot, top)]
        if i == k - 1:
            edges += [(top, t), (bot, t)]
    return LinkGame.from_edges(n, edges, s, t)


def _with_pendant(g: LinkGame, at: int) -> LinkGame:
    adj = list(g.adj) + [1 << at]
    adj[at] |= 1 << g.n
    other = g.t if at == g.s else g.s
    return LinkGame(g.n + 1, tuple(adj), g.n, other)


def _constructors() -> dict[str, LinkGame]:
    return {
        "W1": LinkGame.from_edges(3, [(0, 2), (2, 1)], 0, 1),
        "S2": _chain(1),
        "W3": _with_pendant(_chain(1), 0),
    }


class NamedLinkError(ValueError):
    pass


def named_link(name: str, weak_atlas: Atlas | None = None) -> LinkGame:
    """Construct a link by its conventional name.

    W1, W3, S2, SC(k) and SC(k)+pendant are built directly; W5A..W5Z and
    W7A..W7F resolve against a weak atlas by reducibility/pivot signature
    (the W5A/W5B and W7D..W7F orderings are provisional, fixed by canonical
    order).
    """
    name = name.strip()
    basics = _constructors()
    if name in basics:
        return basics[name]
    if name.startswith("SC"):
        body = name[2:]
        pendant = body.endswith("+pendant")
        if pendant:
            body = body[: -len("+pendant")]
        if not body.isdigit() or int(body) < 1:
            raise NamedLinkError(f"bad chain name {name!r}")
        chain = _chain(int(body))
        return _with_pendant(chain, chain.s) if pendant else chain
    if name in ("W5A", "W5B", "W5C", "W5X", "W5Z") or (
        len(name) == 3 and name.startswith("W7")
    ):
        if weak_atlas is None:
            raise NamedLinkError(f"{name} resolves against the atlas; none given")
        return _resolve_atlas_name(name, weak_atlas)
    raise NamedLinkError(f"unknown link name {name!r}")


def _resolve_atlas_name(name: str, atlas: Atlas) -> LinkGame:
    if name.startswith("W5"):
        records = atlas.by_weight(5)
        if len(records) != 5:
            raise NamedLinkError("atlas does not contain the five weight-5 links")
        by = {}
        pendant = []
        for rec in records:
            f = rec.flags
            if min(rec.summary.d_s, rec.summary.d_t) == 1:
                pendant.append(rec)
            elif f["S"] and f["P"] and not f["T"]:
                by["W5X"] = rec
            elif f["T"] and not f["S"] and not f["P"]:
                by["W5Z"] = rec
        sc2_key = _chain(2).canonical_key
        rest = []
        for rec in pendant:
            if _pendant_removal_key(rec) == sc2_key:
                by["W5C"] = rec
            else:
                rest.append(rec)
        rest.sort(key=lambda r: r.g6)  # provisional W5A/W5B ordering
        for label, rec in zip(("W5A", "W5B"), rest):
            by[label] = rec
        if name not in by:
            raise NamedLinkError(f"could not bind {name} from atlas signatures")
        return by[name].game()

    records = [rec for rec in atlas.by_weight(7) if not rec.flags["S"]]
    if len(records) != 8:
        raise NamedLinkError("atlas does not contain the eight S-irreducible weight-7 links")
    w5x_key = None
    for rec in atlas.by_weight(5):
        f = rec.flags
        if min(rec.summary.d_s, rec.summary.d_t) > 1 and f["S"] and f["P"] and not f["T"]:
            w5x_key = rec.key
    by = {}
    p_only = [r for r in records if r.flags["P"] and not r.flags["T"]]
    pt = [r for r in records if r.flags["P"] and r.flags["T"]]
    t_only = [r for r in records if r.flags["T"] and not r.flags["P"]]
    for rec in p_only:
        # the capture reduction lands on the terminal-degree-2 weight-5 link,
        # possibly with one extra edge
        if w5x_key in _capture_reduction_closure(rec):
            by["W7A"] = rec
        else:
            by["W7B"] = rec
    if pt:
        by["W7C"] = pt[0]
    # provisional W7D/E/F ordering among the not-P-reducible three
    t_only.sort(key=lambda r: (len(r.pivots), r.g6))
    for label, rec in zip(("W7D", "W7E", "W7F"), t_only):
        by[label] = rec
    if name not in by:
        raise NamedLinkError(f"could not bind {name} from atlas signatures")
    return by[name].game()


def _pendant_removal_key(rec: LinkRecord) -> bytes | None:
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
        return LinkGame(len(keep), tuple(adj), index[nb], index[other]).canonical_key
    return None


def _capture_reduction_closure(rec: LinkRecord) -> set[bytes]:
    """Canonical keys of capture-pair reductions, plus their single-edge
    deletions (reductions may carry one extra edge)."""
    g = rec.game()
    out = set()
    for pair in structure.mutually_supporting_pairs(g):
        result = structure.capture_pair(g, pair)
        if isinstance(result, LinkGame):
            out.add(result.canonical_key)
            for edge in result.edges():
                out.add(result.delete_edge(*edge).canonical_key)
    return out
