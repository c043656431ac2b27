"""Small simple graphs stored as adjacency bitrows, plus exact invariants.

A :class:`Graph` holds ``n`` vertices and one integer per vertex whose set
bits are its neighbours.  Everything here is exact; the invariants use
plain exponential search, which is fine for the n <= 10 range the
verification code works in.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    """Raised for invalid graph construction (bad vertex, self-loop, ...)."""


class CapacityError(GraphError):
    """Raised when a graph would exceed :data:`MAX_VERTICES`."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        window = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~window:
                raise GraphError(f"row {u} has bits outside the {self.n}-vertex window")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            r = row
            while r:
                v = (r & -r).bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r &= r - 1

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def min_degree(self) -> int:
        return min(self.degrees())

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield (u, v)

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def edge_mask(self) -> int:
        """Edge set as a C(n,2)-bit mask, bit i for the i-th pair in lexicographic order."""
        mask = 0
        bit = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u] >> v & 1:
                    mask |= 1 << bit
                bit += 1
        return mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


# -- construction ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_mask(n: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.edge_mask`."""
    adj = [0] * n
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> bit & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(adj))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    return from_edges(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices, capacity is {MAX_VERTICES}")
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices, capacity is {MAX_VERTICES}")
    g_bits = (1 << g.n) - 1
    h_bits = ((1 << h.n) - 1) << g.n
    rows = tuple(row | h_bits for row in g.adj)
    rows += tuple((row << g.n) | g_bits for row in h.adj)
    return Graph(n, rows)


# -- invariants --------------------------------------------------------


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nxt |= g.adj[v]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 1)


def independence_number(g: Graph) -> int:
    """Exact independence number by bitset branch and bound."""
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        if size + _popcount(cand) <= best:
            return
        v = (cand & -cand).bit_length() - 1
        # take v, then drop v
        search(cand & ~g.adj[v] & ~(1 << v), size + 1)
        if g.adj[v] & cand:
            search(cand & ~(1 << v), size)

    search((1 << g.n) - 1, 0)
    return best


def _colorable(g: Graph, k: int) -> bool:
    colors = [-1] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        # a fresh colour is only worth trying once (colour-permutation symmetry)
        for c in range(min(k, used + 1)):
            if all(colors[w] != c for w in range(v) if g.adj[v] >> w & 1):
                colors[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    k = 1
    while not _colorable(g, k):
        k += 1
    return k


def _max_edge_disjoint_paths(g: Graph, s: int, t: int) -> int:
    # unit capacities on both arc directions; residual kept as a dict of arc -> capacity
    cap = {}
    for u, v in g.edges():
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    flow = 0
    while True:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            row = g.adj[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow
        v = t
        while v != s:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def edge_connectivity(g: Graph) -> int:
    """Minimum edge cut size via unit-capacity max flow from vertex 0.

    Disconnected graphs give 0.  ``K_1`` has no edge to cut and also gives 0.
    """
    if g.n < 2 or not is_connected(g):
        return 0
    return min(_max_edge_disjoint_paths(g, 0, t) for t in range(1, g.n))


# -- isomorphism -------------------------------------------------------


def _refine_pair(g: Graph, h: Graph) -> tuple[list[int], list[int]] | None:
    # refine both graphs against one shared palette so colour names are comparable
    cg, ch = g.degrees(), h.degrees()
    while True:
        sg = [(cg[v], tuple(sorted(cg[w] for w in range(g.n) if g.adj[v] >> w & 1))) for v in range(g.n)]
        sh = [(ch[v], tuple(sorted(ch[w] for w in range(h.n) if h.adj[v] >> w & 1))) for v in range(h.n)]
        if sorted(sg) != sorted(sh):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(sg)))}
        ng = [palette[s] for s in sg]
        nh = [palette[s] for s in sh]
        if len(palette) == len(set(cg)):
            return ng, nh
        cg, ch = ng, nh


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    refined = _refine_pair(g, h)
    if refined is None:
        return False
    cg, ch = refined
    n = g.n
    # map the most constrained (rarest colour) vertices first
    freq = {c: cg.count(c) for c in cg}
    order = sorted(range(n), key=lambda v: (freq[cg[v]], cg[v], v))
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (g.adj[v] >> u & 1) != (h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
                image[v] = -1
        return False

    return extend(0)
