"""The ABC index and the scalar helper functions used in its extremal bounds.

All real arithmetic is IEEE double.  The polynomial :func:`big_h` is
evaluated with Python integers so its sign is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .graph import Graph

SQRT2 = math.sqrt(2.0)


class DomainError(ValueError):
    """Argument outside the domain on which a function is defined."""


@dataclass
class GridCheckResult:
    description: str
    domain: dict[str, Any]
    violations: list[tuple] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "grid_check",
            "description": self.description,
            "domain": self.domain,
            "checked": self.checked,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
        }


# -- edge weight and its relatives ---------------------------------------


def f(x: float, y: float) -> float:
    """Edge weight sqrt((x + y - 2) / (x y)) for end degrees x and y."""
    if x < 1 or y < 1:
        raise DomainError(f"f({x}, {y}) needs x, y >= 1")
    return math.sqrt((x + y - 2) / (x * y))


def g(x: float, y: float) -> float:
    return f(x + 1, y) - f(x, y)


def big_f(x: float, m: int) -> float:
    """x * f(x + m, 1)."""
    if x < 1 or m < 1:
        raise DomainError(f"big_f({x}, {m}) needs x, m >= 1")
    return x * f(x + m, 1)


def gap(a: float, b: float) -> float:
    """f(a, b - 1) - f(a - 1, b); positive whenever a > b > 1."""
    if not a > b > 1:
        raise DomainError(f"gap({a}, {b}) needs a > b > 1")
    return f(a, b - 1) - f(a - 1, b)


def abc_index(graph: Graph) -> float:
    deg = graph.degrees()
    total = 0.0
    for u, v in graph.edges():
        total += math.sqrt((deg[u] + deg[v] - 2) / (deg[u] * deg[v]))
    return total


# -- edge-connectivity bound helpers -------------------------------------


def h(n: float, n1: float) -> float:
    if n < 2 or not 1 <= n1 <= n / 2:
        raise DomainError(f"h({n}, {n1}) needs n >= 2 and 1 <= n1 <= n/2")
    return (n - 2) ** 1.5 - (n1**1.5 + (n - n1) ** 1.5)


def l(n: float, k: float, n1: float) -> float:  # noqa: E741
    if n < 4 or k < 2 or not 1 <= n1 <= n - 1:
        raise DomainError(f"l({n}, {k}, {n1}) needs n >= 4, k >= 2, 1 <= n1 <= n-1")
    return SQRT2 * k * (
        math.sqrt((n - 2) / (n1 * (n - n1))) - math.sqrt((n + k - 3) / (k * (n - 1)))
    )


def big_h(n: int, k: int) -> int:
    """Exact value of the quintic-in-n polynomial whose roots would be critical points of l(n, k, k+1) in k."""
    if n < 1 or k < 1:
        raise DomainError(f"big_h({n}, {k}) needs n, k >= 1")
    n, k = int(n), int(k)
    return (
        (k**2 + k - 1) * n**5
        - (8 * k**2 + 6 * k - 9) * n**4
        + (5 * k**5 + 8 * k**4 + 19 * k**2 + 6 * k - 30) * n**3
        + (k**6 - 24 * k**5 - 42 * k**4 - 2 * k**3 - 3 * k**2 + 20 * k + 46) * n**2
        - (8 * k**7 + 6 * k**6 - 57 * k**5 - 75 * k**4 + 10 * k**3 + 36 * k**2 + 39 * k + 33) * n
        + 4 * k**8 + 12 * k**7 - 3 * k**6 - 46 * k**5 - 37 * k**4 + 16 * k**3 + 27 * k**2 + 18 * k + 9
    )


def _check_claim_domain(n: int, k: int, n1: int) -> None:
    if n < 10 or not (3 <= k + 1 <= n1 and 2 * n1 <= n):
        raise DomainError(f"claim needs n >= 10 and 3 <= k+1 <= n1 <= n/2, got ({n}, {k}, {n1})")


def claim_margin(n: int, k: int, n1: int) -> float:
    """Left side minus right side of the two-clique comparison for edge cuts of size k."""
    _check_claim_domain(n, k, n1)
    n2 = n - n1
    lhs = k * math.sqrt((n + k - 3) / (k * (n - 1))) + (n - 2) ** 1.5 / SQRT2
    rhs = n1**1.5 / SQRT2 + n2**1.5 / SQRT2 + k * math.sqrt((n1 + n2 - 2) / (n1 * n2))
    return lhs - rhs


def claim_holds(n: int, k: int, n1: int) -> bool:
    return claim_margin(n, k, n1) > 0


def bridge_value(n: int, x: int) -> float:
    """ABC index of K_x and K_{n-x} joined by a single edge."""
    if not 2 <= x <= n - 2:
        raise DomainError(f"bridge_value({n}, {x}) needs 2 <= x <= n-2")
    y = n - x
    return (
        (x - 1) * f(x, x - 1)
        + 0.5 * (x - 1) * (x - 2) * f(x - 1, x - 1)
        + f(x, y)
        + (y - 1) * f(y, y - 1)
        + 0.5 * (y - 1) * (y - 2) * f(y - 1, y - 1)
    )


# -- grid checks ---------------------------------------------------------
# Each "for all x" statement is checked on a finite integer grid with unit step.

F_X_MAX = 1000
F_Y_MAX = 50
BIG_F_X_MAX = 500
BIG_F_M_MAX = 50
GAP_A_MAX = 200
GAP_B_MAX = 100


def check_f_monotonicity(x_max: int = F_X_MAX, y_max: int = F_Y_MAX) -> GridCheckResult:
    res = GridCheckResult(
        "f(x,1) strictly increasing; f(x,y) strictly decreasing in x for y >= 3",
        {"x": [1, x_max], "y": [3, y_max]},
    )
    for x in range(1, x_max):
        res.checked += 1
        if not f(x + 1, 1) > f(x, 1):
            res.violations.append(("f(x,1)", x, 1))
    for y in range(3, y_max + 1):
        for x in range(1, x_max):
            res.checked += 1
            if not f(x + 1, y) < f(x, y):
                res.violations.append(("f(x,y)", x, y))
    return res


def check_g_monotonicity(x_max: int = F_X_MAX, y_max: int = F_Y_MAX) -> GridCheckResult:
    res = GridCheckResult(
        "g(x,1) strictly decreasing; g(x,y) increasing in x for y >= 2",
        {"x": [1, x_max - 1], "y": [2, y_max]},
    )
    for x in range(1, x_max - 1):
        res.checked += 1
        if not g(x + 1, 1) < g(x, 1):
            res.violations.append(("g(x,1)", x, 1))
    for y in range(2, y_max + 1):
        for x in range(1, x_max - 1):
            res.checked += 1
            if not g(x + 1, y) >= g(x, y):
                res.violations.append(("g(x,y)", x, y))
    return res


def check_big_f_convexity(x_max: int = BIG_F_X_MAX, m_max: int = BIG_F_M_MAX) -> GridCheckResult:
    """Second differences positive, first differences positive, and the increasing-difference inequality."""
    res = GridCheckResult(
        "F(x)=x f(x+m,1) strictly increasing and convex; F(x1+1)-F(x1) > F(x2)-F(x2-1) for x1 >= x2",
        {"x": [1, x_max], "m": [1, m_max]},
    )
    for m in range(1, m_max + 1):
        vals = [0.0] + [big_f(x, m) for x in range(1, x_max + 2)]  # vals[x] = F(x)
        for x in range(1, x_max + 1):
            res.checked += 1
            if not vals[x + 1] > vals[x]:
                res.violations.append(("increasing", x, m))
            if x >= 2:
                res.checked += 1
                if not vals[x + 1] - 2 * vals[x] + vals[x - 1] > 0:
                    res.violations.append(("convex", x, m))
        # with convexity, x1 >= x2 reduces to the x1 = x2 case plus monotone chaining;
        # check the x1 = x2 case directly, it is the tightest
        for x in range(2, x_max + 1):
            res.checked += 1
            if not vals[x + 1] - vals[x] > vals[x] - vals[x - 1]:
                res.violations.append(("difference", x, m))
    return res


def check_gap_positive(a_max: int = GAP_A_MAX, b_max: int = GAP_B_MAX) -> GridCheckResult:
    res = GridCheckResult("gap(a,b) > 0 for a > b >= 2", {"a": ["b+1", a_max], "b": [2, b_max]})
    for b in range(2, b_max + 1):
        for a in range(b + 1, a_max + 1):
            res.checked += 1
            if not gap(a, b) > 0:
                res.violations.append((a, b))
    return res


def _claim_grid_arrays(n_min: int, n_max: int):
    ns, ks, n1s = [], [], []
    for n in range(n_min, n_max + 1):
        for k in range(2, n // 2):
            n1 = np.arange(k + 1, n // 2 + 1)
            ns.append(np.full(n1.size, n))
            ks.append(np.full(n1.size, k))
            n1s.append(n1)
    return (np.concatenate(ns).astype(float), np.concatenate(ks).astype(float),
            np.concatenate(n1s).astype(float))


def claim_grid(n_min: int = 10, n_max: int = 300) -> GridCheckResult:
    """Evaluate the two-clique comparison on every (n, k, n1) with 3 <= k+1 <= n1 <= n/2.

    Vectorised over the grid; each violation is re-confirmed with the scalar
    :func:`claim_margin` so the two evaluations cannot silently disagree.
    """
    res = GridCheckResult(
        "k f(k,n-1) + (n-2)^1.5/sqrt2 > (n1^1.5 + n2^1.5)/sqrt2 + k f(n1,n2)",
        {"n": [n_min, n_max], "k": "2 <= k", "n1": "k+1 <= n1 <= n/2"},
    )
    if n_max < n_min:
        return res
    n, k, n1 = _claim_grid_arrays(n_min, n_max)
    n2 = n - n1
    lhs = k * np.sqrt((n + k - 3) / (k * (n - 1))) + (n - 2) ** 1.5 / SQRT2
    rhs = n1**1.5 / SQRT2 + n2**1.5 / SQRT2 + k * np.sqrt((n1 + n2 - 2) / (n1 * n2))
    res.checked = int(n.size)
    for i in np.flatnonzero(~(lhs > rhs)):
        pt = (int(n[i]), int(k[i]), int(n1[i]))
        res.violations.append(pt + (claim_margin(*pt),))
    return res


def big_h_grid(n_min: int = 20, n_max: int = 23) -> GridCheckResult:
    res = GridCheckResult("H(n,k) > 0 (exact integers)", {"n": [n_min, n_max], "k": "2 <= k <= n/2 - 1"})
    for n in range(n_min, n_max + 1):
        for k in range(2, n // 2):
            res.checked += 1
            if big_h(n, k) <= 0:
                res.violations.append((n, k))
    return res


def check_h_l_monotonicity(n_min: int = 10, n_max: int = 300) -> GridCheckResult:
    """h increasing in n1, l decreasing in n1 on 3 <= k+1 <= n1 <= n/2."""
    res = GridCheckResult(
        "h(n,n1) strictly increasing and l(n,k,n1) strictly decreasing in n1",
        {"n": [n_min, n_max], "n1": "k+1 <= n1 <= n/2"},
    )
    for n in range(n_min, n_max + 1):
        for n1 in range(3, n // 2):
            res.checked += 1
            if not h(n, n1 + 1) > h(n, n1):
                res.violations.append(("h", n, n1))
        for k in range(2, n // 2):
            for n1 in range(k + 1, n // 2):
                res.checked += 1
                if not l(n, k, n1 + 1) < l(n, k, n1):
                    res.violations.append(("l", n, k, n1))
    return res


def check_l_diagonal_increasing(n_min: int = 20, n_max: int = 300) -> GridCheckResult:
    """Discrete check that k -> l(n, k, k+1) increases on 2 <= k <= n/2 - 1."""
    res = GridCheckResult(
        "l(n,k,k+1) strictly increasing in k", {"n": [n_min, n_max], "k": "2 <= k <= n/2 - 1"}
    )
    for n in range(n_min, n_max + 1):
        for k in range(2, n // 2 - 1):
            res.checked += 1
            if not l(n, k + 1, k + 2) > l(n, k, k + 1):
                res.violations.append((n, k))
    return res
