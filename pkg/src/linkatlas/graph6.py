"""graph6 text encoding of simple undirected graphs.

Implements the single-byte-order form (n <= 62), which covers every graph
this package produces: one size byte ``n + 63`` followed by the upper
triangle of the adjacency matrix in column order, packed six bits per
printable byte with offset 63.
"""

from __future__ import annotations

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode(n: int, adj: tuple[int, ...]) -> str:
    """Encode ``(n, adj)`` (adjacency bitmask rows) as a graph6 string."""
    if not 0 <= n <= 62:
        raise ValueError(f"graph6 single-byte form requires 0 <= n <= 62, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> tuple[int, tuple[int, ...]]:
    """Decode a graph6 string (optionally prefixed by ``>>graph6<<``)."""
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(text[0])
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) are not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid size byte {text[0]!r}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - 1 != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, got {len(text) - 1}", len(text)
        )
    adj = [0] * n
    pos = 0
    for k, ch in enumerate(text[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid data byte {ch!r}", k)
        for b in range(5, -1, -1):
            if pos >= nbits:
                if (val >> b) & 1:
                    raise Graph6Error("nonzero padding bits", k)
                continue
            if (val >> b) & 1:
                # column order: pos runs over (i, j) with j outer, i < j
                i, j = _pair_at(pos)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return n, tuple(adj)


def _pair_at(pos: int) -> tuple[int, int]:
    j = 1
    while pos >= j:
        pos -= j
        j += 1
    return pos, j
