"""Compiled inner loop for labeled-graph scans.

Each call walks a contiguous range of edge masks and writes one float per
mask: the ABC index if the graph is connected and lies in the requested
class, NaN otherwise.  Invariants are computed independently of the
pure-Python versions in :mod:`abcindex.graph` (cut enumeration instead of
max flow, subset DP instead of branch and bound), so the two can be
cross-checked.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

KIND_NONE = 0
KIND_INDEPENDENCE = 1
KIND_PENDANT = 2
KIND_EDGE_CONNECTIVITY = 3
KIND_CHROMATIC = 4
# abc of every mask, connected or not
KIND_ALL = -1

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


@njit(cache=True, nogil=True)
def _popcount(x, table):
    c = 0
    while x:
        c += table[x & 0xFF]
        x >>= 8
    return c


def pair_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    us, vs = [], []
    for u in range(n):
        for v in range(u + 1, n):
            us.append(u)
            vs.append(v)
    return np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64)


def cut_table(n: int) -> np.ndarray:
    """cut[S] = edge-mask bits of the pairs crossing vertex set S."""
    us, vs = pair_tables(n)
    cut = np.zeros(1 << n, dtype=np.int64)
    for s in range(1 << n):
        bits = 0
        for i in range(us.size):
            if ((s >> us[i]) & 1) != ((s >> vs[i]) & 1):
                bits |= 1 << i
        cut[s] = bits
    return cut


@njit(cache=True, nogil=True)
def _connected(n, adj):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = 0
            while not (f >> v) & 1:
                v += 1
            nxt |= adj[v]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


@njit(cache=True, nogil=True)
def _independence(n, adj, indep, table):
    indep[0] = True
    best = 0
    for s in range(1, 1 << n):
        v = 0
        while not (s >> v) & 1:
            v += 1
        rest = s & (s - 1)
        ok = indep[rest] and (adj[v] & rest) == 0
        indep[s] = ok
        if ok:
            c = _popcount(s, table)
            if c > best:
                best = c
    return best


@njit(cache=True, nogil=True)
def _min_cut(n, mask, cut, table):
    # cuts containing vertex 0, excluding the full set
    best = 1 << 30
    full = (1 << n) - 1
    for s in range(1, full, 2):
        c = _popcount(mask & cut[s], table)
        if c < best:
            best = c
    return best


@njit(cache=True, nogil=True)
def _colorable(n, adj, k, colors, prefmax):
    for i in range(n):
        colors[i] = -1
    prefmax[0] = -1
    v = 0
    while v >= 0:
        if v == n:
            return True
        limit = prefmax[v] + 1
        if limit > k - 1:
            limit = k - 1
        c = colors[v] + 1
        placed = False
        while c <= limit:
            ok = True
            nb = adj[v]
            for w in range(v):
                if (nb >> w) & 1 and colors[w] == c:
                    ok = False
                    break
            if ok:
                placed = True
                break
            c += 1
        if placed:
            colors[v] = c
            prefmax[v + 1] = prefmax[v] if prefmax[v] > c else c
            v += 1
            if v < n:
                colors[v] = -1
        else:
            colors[v] = -1
            v -= 1
    return False


@njit(cache=True, nogil=True)
def _chromatic(n, adj, colors, prefmax):
    k = 1
    while not _colorable(n, adj, k, colors, prefmax):
        k += 1
    return k


@njit(cache=True, nogil=True)
def scan(n, lo, hi, kind, value, pu, pv, cut, table, out):
    """Fill ``out[i]`` for mask ``lo + i``; returns the number of class members."""
    m = pu.size
    adj = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    indep = np.zeros(1 << n, dtype=np.bool_)
    colors = np.zeros(n, dtype=np.int64)
    prefmax = np.zeros(n + 1, dtype=np.int64)
    members = 0
    for mask in range(lo, hi):
        for v in range(n):
            adj[v] = 0
        for i in range(m):
            if (mask >> i) & 1:
                adj[pu[i]] |= 1 << pv[i]
                adj[pv[i]] |= 1 << pu[i]
        if kind != -1 and not _connected(n, adj):
            out[mask - lo] = np.nan
            continue
        for v in range(n):
            deg[v] = _popcount(adj[v], table)
        if kind == 1:
            if _independence(n, adj, indep, table) != value:
                out[mask - lo] = np.nan
                continue
        elif kind == 2:
            p = 0
            for v in range(n):
                if deg[v] == 1:
                    p += 1
            if p != value:
                out[mask - lo] = np.nan
                continue
        elif kind == 3:
            if _min_cut(n, mask, cut, table) != value:
                out[mask - lo] = np.nan
                continue
        elif kind == 4:
            if _chromatic(n, adj, colors, prefmax) != value:
                out[mask - lo] = np.nan
                continue
        total = 0.0
        for i in range(m):
            if (mask >> i) & 1:
                a = deg[pu[i]]
                b = deg[pv[i]]
                total += math.sqrt((a + b - 2) / (a * b))
        out[mask - lo] = total
        members += 1
    return members


@njit(cache=True, nogil=True)
def invariants(n, lo, hi, pu, pv, cut, table, out):
    """Per-mask (connected, independence, pendant, edge connectivity, chromatic) rows for testing."""
    m = pu.size
    adj = np.zeros(n, dtype=np.int64)
    indep = np.zeros(1 << n, dtype=np.bool_)
    colors = np.zeros(n, dtype=np.int64)
    prefmax = np.zeros(n + 1, dtype=np.int64)
    for mask in range(lo, hi):
        for v in range(n):
            adj[v] = 0
        for i in range(m):
            if (mask >> i) & 1:
                adj[pu[i]] |= 1 << pv[i]
                adj[pv[i]] |= 1 << pu[i]
        r = mask - lo
        conn = _connected(n, adj)
        out[r, 0] = 1 if conn else 0
        out[r, 1] = _independence(n, adj, indep, table)
        p = 0
        for v in range(n):
            if _popcount(adj[v], table) == 1:
                p += 1
        out[r, 2] = p
        out[r, 3] = _min_cut(n, mask, cut, table) if n > 1 else 0
        out[r, 4] = _chromatic(n, adj, colors, prefmax)
