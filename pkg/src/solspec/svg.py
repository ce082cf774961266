"""Minimal SVG charts: dual-axis time series and measured-vs-predicted scatter."""
from __future__ import annotations

from datetime import date
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

W, H = 900, 420
LEFT, RIGHT, TOP, BOTTOM = 70, 70, 40, 50
LEFT_COLOR, RIGHT_COLOR = "#d95f02", "#1b9e77"


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _polyline(xs, ys, color) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
    return f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{pts}"/>'


def _header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">',
        f'<rect width="{W}" height="{H}" fill="white"/>',
        f'<text x="{W / 2}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<rect x="{LEFT}" y="{TOP}" width="{W - LEFT - RIGHT}" height="{H - TOP - BOTTOM}" fill="none" stroke="#444"/>',
    ]


def dual_axis_timeseries(
    dates: Sequence[date],
    left: Sequence[float],
    right: Sequence[float],
    left_label: str = "GHI (W/m2)",
    right_label: str = "DNI (W/m2)",
    title: str = "Daily mean GHI and DNI",
) -> str:
    """Two series over a shared date axis, each with its own y scale."""
    n = len(dates)
    left, right = np.asarray(left, float), np.asarray(right, float)
    pw, ph = W - LEFT - RIGHT, H - TOP - BOTTOM
    xs = [LEFT + pw * (i / max(n - 1, 1)) for i in range(n)]
    out = _header(title)
    for values, color, side, label in ((left, LEFT_COLOR, "left", left_label), (right, RIGHT_COLOR, "right", right_label)):
        hi = float(values.max()) if n else 1.0
        ticks = _ticks(0.0, hi if hi > 0 else 1.0)
        top = ticks[-1]
        ys = [TOP + ph * (1 - v / top) for v in values]
        out.append(_polyline(xs, ys, color))
        x_axis = LEFT - 6 if side == "left" else W - RIGHT + 6
        anchor = "end" if side == "left" else "start"
        for t in ticks:
            y = TOP + ph * (1 - t / top)
            out.append(f'<text x="{x_axis}" y="{_fmt(y + 4)}" text-anchor="{anchor}" fill="{color}">{t:.0f}</text>')
        lx = 16 if side == "left" else W - 16
        out.append(
            f'<text x="{lx}" y="{H / 2}" fill="{color}" text-anchor="middle" '
            f'transform="rotate(-90 {lx} {H / 2})">{escape(label)}</text>'
        )
    seen = set()
    for i, d in enumerate(dates):
        if d.day == 1 and (d.year, d.month) not in seen:
            seen.add((d.year, d.month))
            out.append(f'<text x="{_fmt(xs[i])}" y="{H - BOTTOM + 16}" text-anchor="middle">{d:%b}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def scatter(measured: Sequence[float], predicted: Sequence[float], title: str = "Measured vs predicted DNI") -> str:
    """Scatter with a 1:1 reference line, both axes in W/m2."""
    m, p = np.asarray(measured, float), np.asarray(predicted, float)
    lo = float(min(m.min(), p.min(), 0.0)) if m.size else 0.0
    hi = float(max(m.max(), p.max())) if m.size else 1.0
    if hi <= lo:
        hi = lo + 1.0
    pw, ph = W - LEFT - RIGHT, H - TOP - BOTTOM

    def sx(v):
        return LEFT + pw * (v - lo) / (hi - lo)

    def sy(v):
        return TOP + ph * (1 - (v - lo) / (hi - lo))

    out = _header(title)
    out.append(f'<line x1="{_fmt(sx(lo))}" y1="{_fmt(sy(lo))}" x2="{_fmt(sx(hi))}" y2="{_fmt(sy(hi))}" stroke="#999" stroke-dasharray="4 3"/>')
    for a, b in zip(m, p):
        out.append(f'<circle cx="{_fmt(sx(a))}" cy="{_fmt(sy(b))}" r="1.8" fill="{RIGHT_COLOR}" fill-opacity="0.5"/>')
    for t in _ticks(lo, hi):
        out.append(f'<text x="{_fmt(sx(t))}" y="{H - BOTTOM + 16}" text-anchor="middle">{t:.0f}</text>')
        out.append(f'<text x="{LEFT - 6}" y="{_fmt(sy(t) + 4)}" text-anchor="end">{t:.0f}</text>')
    out.append(f'<text x="{W / 2}" y="{H - 10}" text-anchor="middle">measured DNI (W/m2)</text>')
    out.append(f'<text x="16" y="{H / 2}" text-anchor="middle" transform="rotate(-90 16 {H / 2})">predicted DNI (W/m2)</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
