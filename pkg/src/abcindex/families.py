"""Extremal graph constructions and their closed-form ABC values.

Builders return :class:`~abcindex.graph.Graph` objects and so are limited
to 32 vertices; the ``formula_*`` functions are scalar and accept any n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import graph as gc
from .graph import Graph
from .indexmath import DomainError, f

FAMILIES = ("independence", "pendant", "edgeconn", "turan")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    param: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        _RANGE_CHECKS[self.family](self.n, self.param)

    def build(self) -> Graph:
        return _BUILDERS[self.family](self.n, self.param)

    def formula(self) -> float:
        return _FORMULAS[self.family](self.n, self.param)


# -- range checks ----------------------------------------------------------


def _check_independence(n: int, beta: int) -> None:
    if not 1 <= beta <= n - 1:
        raise DomainError(f"independence family needs 1 <= beta <= n-1, got n={n}, beta={beta}")


def _check_pendant(n: int, p: int) -> None:
    if n < 3 or not 1 <= p <= n - 1:
        raise DomainError(f"pendant family needs n >= 3 and 1 <= p <= n-1, got n={n}, p={p}")
    # n - p = 2 with n = 3 would be a path on 3 vertices carrying 0 extra leaves; G' needs n >= 4
    if n - p == 2 and n < 4:
        raise DomainError(f"pendant family with n-p=2 needs n >= 4, got n={n}")


def _check_edgeconn(n: int, k: int) -> None:
    if n < 6 or not 2 <= k <= n - 2:
        raise DomainError(f"edge-connectivity family needs n >= 6 and 2 <= k <= n-2, got n={n}, k={k}")


def _check_turan(n: int, t: int) -> None:
    if not 2 <= t <= n:
        raise DomainError(f"Turan graph needs 2 <= t <= n, got n={n}, t={t}")


# -- independence number -------------------------------------------------------


def build_independence_extremal(n: int, beta: int) -> Graph:
    _check_independence(n, beta)
    return gc.join(gc.empty(beta), gc.complete(n - beta))


def formula_independence(n: int, beta: int) -> float:
    _check_independence(n, beta)
    r = n - beta
    return beta * r * math.sqrt((2 * n - beta - 3) / (r * (n - 1))) + r * (r - 1) / 2 * math.sqrt(
        (2 * n - 4) / ((n - 1) * (n - 1))
    )


# -- pendant vertices ----------------------------------------------------------


def build_pendant_extremal(n: int, p: int) -> Graph:
    """Star, G' (path u-v-w with n-3 leaves on u), or K_{n-p} with p leaves on one vertex."""
    _check_pendant(n, p)
    if n - p == 1:
        return gc.star(n)
    if n - p == 2:
        # u=0, v=1, w=2, leaves 3..n-1 on u
        return gc.from_edges(n, [(0, 1), (1, 2)] + [(0, x) for x in range(3, n)])
    core = n - p
    edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
    edges += [(0, x) for x in range(core, n)]
    return gc.from_edges(n, edges)


def pendant_case(n: int, p: int) -> int:
    """Which of the three regimes (n-p = 1, n-p = 2, n-p > 2) applies: 1, 2 or 3."""
    _check_pendant(n, p)
    return min(n - p, 3)


def formula_pendant(n: int, p: int) -> float:
    case = pendant_case(n, p)
    if case == 1:
        return math.sqrt((n - 1) * (n - 2))
    if case == 2:
        return (n - 3) * math.sqrt((n - 3) / (n - 2)) + math.sqrt(2)
    r = n - p - 1
    return (
        p * math.sqrt((n - 2) / (n - 1))
        + r * math.sqrt((2 * n - p - 4) / ((n - 1) * r))
        + r * (r - 1) / 2 * math.sqrt((2 * n - 2 * p - 4) / r**2)
    )


# -- edge connectivity ---------------------------------------------------------


def edgeconn_construction(n: int, k: int) -> Graph:
    """K_k joined with (K_1 + K_{n-k-1}) without the n >= 6 hypothesis gate.

    Used for informational runs at n = 4, 5.
    """
    if not 1 <= k <= n - 2:
        raise DomainError(f"construction needs 1 <= k <= n-2, got n={n}, k={k}")
    return gc.join(gc.complete(k), gc.disjoint_union(gc.complete(1), gc.complete(n - k - 1)))


def edgeconn_construction_value(n: int, k: int) -> float:
    """Closed form for :func:`edgeconn_construction`, valid for any 2 <= k <= n-2, n >= 4."""
    if n < 4 or not 2 <= k <= n - 2:
        raise DomainError(f"needs n >= 4 and 2 <= k <= n-2, got n={n}, k={k}")
    return (
        k * math.sqrt((n + k - 3) / (k * (n - 1)))
        + k * (k - 1) / (2 * (n - 1)) * math.sqrt(2 * n - 4)
        + (n - k - 1) * (n - k - 2) / (2 * (n - 2)) * math.sqrt(2 * n - 6)
        + k * (n - k - 1) * math.sqrt((2 * n - 5) / ((n - 1) * (n - 2)))
    )


def build_edgeconn_extremal(n: int, k: int) -> Graph:
    _check_edgeconn(n, k)
    return edgeconn_construction(n, k)


def formula_edgeconn(n: int, k: int) -> float:
    _check_edgeconn(n, k)
    return edgeconn_construction_value(n, k)


# -- chromatic number ---------------------------------------------------------


def turan_parts(n: int, t: int) -> list[int]:
    """Balanced part sizes, larger parts first."""
    _check_turan(n, t)
    q, r = divmod(n, t)
    return [q + 1] * r + [q] * (t - r)


def build_turan(n: int, t: int) -> Graph:
    parts = turan_parts(n, t)
    out = gc.empty(parts[0])
    for size in parts[1:]:
        out = gc.join(out, gc.empty(size))
    return out


def formula_turan(n: int, t: int) -> float:
    """ABC of the complete balanced t-partite graph: sum over part pairs of s_i s_j f(n-s_i, n-s_j)."""
    parts = turan_parts(n, t)
    total = 0.0
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            total += a * b * f(n - a, n - b)
    return total


def formula_bipartite(n: int) -> float:
    if n < 2:
        raise DomainError(f"bipartite bound needs n >= 2, got {n}")
    if n % 2 == 0:
        return n / 2 * math.sqrt(n - 2)
    return 0.5 * math.sqrt((n - 2) * (n * n - 1))


_BUILDERS = {
    "independence": build_independence_extremal,
    "pendant": build_pendant_extremal,
    "edgeconn": build_edgeconn_extremal,
    "turan": build_turan,
}

_FORMULAS = {
    "independence": formula_independence,
    "pendant": formula_pendant,
    "edgeconn": formula_edgeconn,
    "turan": lambda n, t: formula_bipartite(n) if t == 2 else formula_turan(n, t),
}

_RANGE_CHECKS = {
    "independence": _check_independence,
    "pendant": _check_pendant,
    "edgeconn": _check_edgeconn,
    "turan": _check_turan,
}
