"""Dependency-free SVG line charts for sweep rows.

Output depends only on the input rows and the chart spec, so identical
inputs give byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

from .sweep import SweepRow, series

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f")
KIND_LABELS = {"beta": "β", "p": "p", "k": "k"}


@dataclass(frozen=True)
class ChartSpec:
    title: str = "Maximum ABC index"
    x_label: str = "parameter value"
    y_label: str = "maximum ABC index"
    width: int = 720
    height: int = 450


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    step = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(step))
    for m in (1, 2, 2.5, 5, 10):
        if step <= m * mag:
            step = m * mag
            break
    start = (lo // step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9:
        if t >= lo - 1e-9:
            ticks.append(t)
        t += step
    return ticks


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick_label(x: float) -> str:
    return str(int(round(x))) if abs(x - round(x)) < 1e-9 else f"{x:g}"


def render_svg(rows: Sequence[SweepRow], spec: ChartSpec = ChartSpec()) -> str:
    if not rows:
        raise ValueError("cannot render an empty sweep")
    groups = series(rows)
    xs = [r.param_value for r in rows]
    ys = [r.abc_max for r in rows]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x0 == x1:
        x0, x1 = x0 - 1, x1 + 1
    if y0 == y1:
        y0, y1 = y0 - 1, y1 + 1

    left, right, top, bottom = 70, 150, 40, 50
    pw = spec.width - left - right
    ph = spec.height - top - bottom

    def px(x: float) -> float:
        return left + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return top + ph - (y - y0) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
        f'<text x="{spec.width / 2:.1f}" y="22" text-anchor="middle" font-family="sans-serif" '
        f'font-size="15">{escape(spec.title)}</text>',
        f'<g stroke="black" stroke-width="1">'
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}"/>'
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}"/></g>',
    ]
    tick = ['<g font-family="sans-serif" font-size="11">']
    for t in _nice_ticks(x0, x1):
        tick.append(f'<line x1="{_fmt(px(t))}" y1="{top + ph}" x2="{_fmt(px(t))}" y2="{top + ph + 5}" stroke="black"/>')
        tick.append(f'<text x="{_fmt(px(t))}" y="{top + ph + 18}" text-anchor="middle">{_tick_label(t)}</text>')
    for t in _nice_ticks(y0, y1):
        tick.append(f'<line x1="{left - 5}" y1="{_fmt(py(t))}" x2="{left}" y2="{_fmt(py(t))}" stroke="black"/>')
        tick.append(f'<text x="{left - 8}" y="{_fmt(py(t) + 4)}" text-anchor="end">{_tick_label(t)}</text>')
    tick.append("</g>")
    out.extend(tick)
    out.append(
        f'<text x="{left + pw / 2:.1f}" y="{spec.height - 10}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(spec.x_label)}</text>'
    )
    out.append(
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 16 {top + ph / 2:.1f})">{escape(spec.y_label)}</text>'
    )

    for i, ((n, kind), pts) in enumerate(groups.items()):
        color = PALETTE[i % len(PALETTE)]
        coords = " ".join(f"{_fmt(px(r.param_value))},{_fmt(py(r.abc_max))}" for r in pts)
        label = f"n={n}, {KIND_LABELS.get(kind, kind)}"
        out.append(
            f'<polyline data-series="{escape(label)}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" points="{coords}"/>'
        )
        if len(pts) == 1:
            r = pts[0]
            out.append(f'<circle cx="{_fmt(px(r.param_value))}" cy="{_fmt(py(r.abc_max))}" r="3" fill="{color}"/>')
        ly = top + 12 + 18 * i
        lx = left + pw + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(
            f'<text x="{lx + 26}" y="{ly + 4}" font-family="sans-serif" font-size="11">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
