"""Exhaustive scans over all labeled connected graphs on n vertices.

A labeled graph is identified with its edge mask: bit i set means the i-th
vertex pair, in lexicographic order (0,1), (0,2), ..., (n-2,n-1), is an
edge.  The mask space is cut into contiguous shards; each shard is reduced
to a partial result and the partials are merged in ascending shard order,
so the outcome never depends on how many shards or threads were used.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from . import _kernel
from .graph import Graph, from_mask, is_isomorphic
from .records import ExtremalReport, ParamConstraint

log = logging.getLogger(__name__)

MIN_N = 2
MAX_N = 7
MAX_N_OPT_IN = 8
EPS = 1e-9
CHUNK = 1 << 18

_KIND_CODES = {
    "independence": _kernel.KIND_INDEPENDENCE,
    "pendant": _kernel.KIND_PENDANT,
    "edge_connectivity": _kernel.KIND_EDGE_CONNECTIVITY,
    "chromatic": _kernel.KIND_CHROMATIC,
}


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    constraint: Optional[ParamConstraint] = None
    shards: int = 1
    allow_large: bool = False

    def __post_init__(self) -> None:
        top = MAX_N_OPT_IN if self.allow_large else MAX_N
        if not MIN_N <= self.n <= top:
            hint = "" if self.allow_large else " (n=8 needs allow_large=True)"
            raise EnumerationError(f"n={self.n} outside [{MIN_N}, {top}]{hint}")
        if self.shards < 1:
            raise EnumerationError(f"shards must be >= 1, got {self.shards}")

    @property
    def num_masks(self) -> int:
        return 1 << (self.n * (self.n - 1) // 2)

    def shard_bounds(self) -> list[tuple[int, int]]:
        total = self.num_masks
        edges = [total * i // self.shards for i in range(self.shards + 1)]
        return [(edges[i], edges[i + 1]) for i in range(self.shards)]


@lru_cache(maxsize=None)
def _tables(n: int):
    pu, pv = _kernel.pair_tables(n)
    return pu, pv, _kernel.cut_table(n)


def _values(n: int, lo: int, hi: int, kind: int, value: int) -> np.ndarray:
    pu, pv, cut = _tables(n)
    out = np.empty(hi - lo, dtype=np.float64)
    _kernel.scan(n, lo, hi, kind, value, pu, pv, cut, _kernel._POP8, out)
    return out


def _chunks(lo: int, hi: int) -> Iterator[tuple[int, int]]:
    for start in range(lo, hi, CHUNK):
        yield start, min(hi, start + CHUNK)


def _task_code(task: EnumerationTask) -> tuple[int, int]:
    if task.constraint is None:
        return _kernel.KIND_NONE, 0
    return _KIND_CODES[task.constraint.kind], task.constraint.value


def abc_table(n: int, allow_large: bool = False) -> np.ndarray:
    """ABC index of every labeled graph on n vertices, indexed by edge mask."""
    task = EnumerationTask(n, allow_large=allow_large)
    return _values(n, 0, task.num_masks, _kernel.KIND_ALL, 0)


def connected_masks(task: EnumerationTask) -> np.ndarray:
    """Edge masks of every connected graph in the task's class, ascending."""
    kind, value = _task_code(task)
    parts = []
    for lo, hi in _chunks(0, task.num_masks):
        vals = _values(task.n, lo, hi, kind, value)
        parts.append(np.flatnonzero(~np.isnan(vals)).astype(np.int64) + lo)
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def enumerate_connected(task: EnumerationTask) -> Iterator[Graph]:
    """Yield each connected labeled graph (optionally constrained) once, in mask order."""
    kind, value = _task_code(task)
    for lo, hi in _chunks(0, task.num_masks):
        vals = _values(task.n, lo, hi, kind, value)
        for i in np.flatnonzero(~np.isnan(vals)):
            yield from_mask(task.n, int(i) + lo)


def count_connected(task: EnumerationTask) -> int:
    kind, value = _task_code(task)
    pu, pv, cut = _tables(task.n)
    total = 0
    for lo, hi in _chunks(0, task.num_masks):
        out = np.empty(hi - lo, dtype=np.float64)
        total += _kernel.scan(task.n, lo, hi, kind, value, pu, pv, cut, _kernel._POP8, out)
    return total


# -- class maximum -------------------------------------------------------------


@dataclass
class _Partial:
    size: int = 0
    best: float = -np.inf
    masks: Optional[np.ndarray] = None  # members within EPS of best, ascending
    values: Optional[np.ndarray] = None
    runner_up: float = -np.inf  # best member value below best - EPS

    @classmethod
    def from_values(cls, lo: int, vals: np.ndarray) -> _Partial:
        member = ~np.isnan(vals)
        size = int(member.sum())
        if size == 0:
            return cls()
        v = vals[member]
        idx = np.flatnonzero(member)
        best = float(v.max())
        keep = v >= best - EPS
        below = v[~keep]
        return cls(
            size=size,
            best=best,
            masks=idx[keep].astype(np.int64) + lo,
            values=v[keep],
            runner_up=float(below.max()) if below.size else -np.inf,
        )

    def merge(self, other: _Partial) -> _Partial:
        if other.size == 0:
            return self
        if self.size == 0:
            return other
        best = max(self.best, other.best)
        masks = np.concatenate([self.masks, other.masks])
        values = np.concatenate([self.values, other.values])
        keep = values >= best - EPS
        dropped = values[~keep]
        runner = max(self.runner_up, other.runner_up, float(dropped.max()) if dropped.size else -np.inf)
        return _Partial(self.size + other.size, best, masks[keep], values[keep], runner)


def _scan_shard(task: EnumerationTask, lo: int, hi: int) -> _Partial:
    kind, value = _task_code(task)
    acc = _Partial()
    for a, b in _chunks(lo, hi):
        acc = acc.merge(_Partial.from_values(a, _values(task.n, a, b, kind, value)))
    return acc


def scan_class(task: EnumerationTask) -> _Partial:
    bounds = task.shard_bounds()
    workers = min(task.shards, os.cpu_count() or 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda b: _scan_shard(task, *b), bounds))
    else:
        partials = [_scan_shard(task, lo, hi) for lo, hi in bounds]
    result = _Partial()
    for part in partials:
        result = result.merge(part)
    return result


def iso_classes(graphs: list[Graph]) -> list[Graph]:
    """First representative of each isomorphism class, in input order."""
    reps: list[Graph] = []
    keys: list[tuple] = []
    for g in graphs:
        key = (g.num_edges, tuple(sorted(g.degrees())))
        if not any(k == key and is_isomorphic(g, r) for k, r in zip(keys, reps)):
            reps.append(g)
            keys.append(key)
    return reps


def max_abc_over_class(task: EnumerationTask) -> ExtremalReport:
    if task.constraint is None:
        raise EnumerationError("max_abc_over_class needs a constraint")
    log.debug("scanning n=%d %s over %d shard(s)", task.n, task.constraint, task.shards)
    part = scan_class(task)
    if part.size == 0:
        return ExtremalReport(task.n, task.constraint, class_size=0, max_value=None)
    maximizers = [from_mask(task.n, int(m)) for m in part.masks]
    return ExtremalReport(
        n=task.n,
        constraint=task.constraint,
        class_size=part.size,
        max_value=part.best,
        maximizer_iso_classes=iso_classes(maximizers),
        labeled_maximizers=len(maximizers),
        runner_up_gap=part.best - part.runner_up if np.isfinite(part.runner_up) else None,
    )
