"""graph6 encoding for graphs of up to 32 vertices (headerless, single size byte)."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _pairs(n: int):
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph6 writer supports n <= {MAX_VERTICES}")
    bits = [1 if g.adj[i] >> j & 1 else 0 for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        word = 0
        for b in bits[start:start + 6]:
            word = word << 1 | b
        out.append(chr(word + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    if s.startswith(">>graph6<<"):
        raise Graph6Error("headers are not supported", 0)
    first = ord(s[0]) - 63
    if not 0 <= first <= 63:
        raise Graph6Error(f"invalid size byte {s[0]!r}", 0)
    if first == 63:
        raise Graph6Error(f"multi-byte size field (n > 62); capacity is {MAX_VERTICES}", 0)
    n = first
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds capacity {MAX_VERTICES}", 0)
    if n == 0:
        raise Graph6Error("graphs need at least one vertex", 0)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = s[1:]
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for n={n}, got {len(body)}", 1 + min(len(body), expected))
    bits = []
    for offset, ch in enumerate(body, start=1):
        word = ord(ch) - 63
        if not 0 <= word <= 63:
            raise Graph6Error(f"invalid data byte {ch!r}", offset)
        bits.extend(word >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(body))
    adj = [0] * n
    for b, (i, j) in zip(bits, _pairs(n)):
        if b:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))
