"""Formula sweeps over (n, parameter) grids and their CSV form."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .families import formula_edgeconn, formula_independence, formula_pendant

CSV_HEADER = ("n", "param_kind", "param_value", "abc_max")

FORMULAS = {
    "beta": formula_independence,
    "p": formula_pendant,
    "k": formula_edgeconn,
}

# parameter ranges drawn in the published figures (before clamping to n)
FIGURE_RANGES = {"beta": (1, 199), "p": (1, 199), "k": (2, 199)}
FIGURE_NS = (200, 250, 300, 350)


class SweepRangeError(ValueError):
    pass


@dataclass(frozen=True)
class SweepRow:
    n: int
    param_kind: str
    param_value: int
    abc_max: float


def valid_range(kind: str, n: int) -> tuple[int, int]:
    if kind == "k":
        return 2, n - 2
    if kind in ("beta", "p"):
        return 1, n - 1
    raise SweepRangeError(f"unknown parameter kind {kind!r}; expected beta, p or k")


def clamp_range(kind: str, n: int, lo: int, hi: int) -> tuple[int, int]:
    vlo, vhi = valid_range(kind, n)
    return max(lo, vlo), min(hi, vhi)


def sweep(n_list: Iterable[int], param_kind: str, value_range: tuple[int, int]) -> list[SweepRow]:
    """Evaluate the closed form for every n and every parameter in the inclusive range."""
    if param_kind not in FORMULAS:
        raise SweepRangeError(f"unknown parameter kind {param_kind!r}; expected beta, p or k")
    formula = FORMULAS[param_kind]
    lo, hi = value_range
    rows = []
    for n in sorted(n_list):
        vlo, vhi = valid_range(param_kind, n)
        for x in range(lo, hi + 1):
            if not vlo <= x <= vhi:
                raise SweepRangeError(f"row (n={n}, {param_kind}={x}) outside valid range [{vlo}, {vhi}]")
            rows.append(SweepRow(n, param_kind, x, formula(n, x)))
    return rows


def format_value(x: float) -> str:
    # repr-free fixed significant digits; str.format ignores the process locale
    return format(x, ".12g")


def write_csv(rows: Sequence[SweepRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, r.param_kind, r.param_value, format_value(r.abc_max)])


def to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def read_csv(src: TextIO) -> list[SweepRow]:
    reader = csv.DictReader(src)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [
        SweepRow(int(r["n"]), r["param_kind"], int(r["param_value"]), float(r["abc_max"]))
        for r in reader
    ]


def series(rows: Sequence[SweepRow]) -> dict[tuple[int, str], list[SweepRow]]:
    """Group rows by (n, param_kind), keeping first-seen order."""
    out: dict[tuple[int, str], list[SweepRow]] = {}
    for r in rows:
        out.setdefault((r.n, r.param_kind), []).append(r)
    return out
