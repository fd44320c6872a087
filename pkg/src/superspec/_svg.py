"""A tiny self-contained SVG line-plot writer (no plotting toolchain needed)."""

from __future__ import annotations

import math
from html import escape

import numpy as np

LOG_FLOOR = 1e-17

_W, _H = 640, 420
_L, _R, _T, _B = 70, 20, 40, 50
_COLORS = ("#1f4e9c", "#b22222", "#2e7d32", "#6a1b9a")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class Plot:
    """Collects series and markers, then renders a single SVG string."""

    def __init__(self, title: str, xlabel: str, ylabel: str, logy: bool = False):
        self.title, self.xlabel, self.ylabel, self.logy = title, xlabel, ylabel, logy
        self.lines = []  # (x, y, color, dashed)
        self.marks = []  # (x, y, symbol)

    def _y(self, y):
        y = np.asarray(y, dtype=float)
        return np.log10(np.maximum(np.abs(y), LOG_FLOOR)) if self.logy else y

    def line(self, x, y, dashed: bool = False):
        # solid curves cycle through the palette; dashed guides are gray
        solid = sum(1 for s in self.lines if not s[3])
        color = "#888888" if dashed else _COLORS[solid % len(_COLORS)]
        self.lines.append((np.asarray(x, dtype=float), self._y(y), color, dashed))

    def markers(self, x, y, symbol: str):
        if symbol not in ("*", "o"):
            raise ValueError("marker must be '*' or 'o'")
        self.marks.append((np.asarray(x, dtype=float), self._y(y), symbol))

    def render(self) -> str:
        xs = np.concatenate([s[0] for s in self.lines] + [m[0] for m in self.marks])
        ys = np.concatenate([s[1] for s in self.lines] + [m[1] for m in self.marks])
        x0, x1 = float(xs.min()), float(xs.max())
        if self.logy:
            y0, y1 = math.floor(ys.min()), math.ceil(ys.max())
        else:
            pad = 0.05 * (ys.max() - ys.min() or 1.0)
            y0, y1 = float(ys.min() - pad), float(ys.max() + pad)
        if y1 <= y0:
            y1 = y0 + 1.0
        if x1 <= x0:
            x1 = x0 + 1.0

        def px(x):
            return _L + (np.asarray(x) - x0) / (x1 - x0) * (_W - _L - _R)

        def py(y):
            return _T + (y1 - np.asarray(y)) / (y1 - y0) * (_H - _T - _B)

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
            f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="12">',
            f'<rect width="{_W}" height="{_H}" fill="white"/>',
            f'<text x="{_W / 2}" y="22" text-anchor="middle" font-size="14">{escape(self.title)}</text>',
            f'<rect x="{_L}" y="{_T}" width="{_W - _L - _R}" height="{_H - _T - _B}" '
            'fill="none" stroke="black"/>',
        ]
        for k in range(5):
            xv = x0 + k * (x1 - x0) / 4
            out.append(f'<text x="{_fmt(px(xv))}" y="{_H - _B + 16}" text-anchor="middle">{xv:.2g}</text>')
        if self.logy:
            step = max(1, int(math.ceil((y1 - y0) / 8)))
            ticks = [(v, f"1e{v}") for v in range(int(y0), int(y1) + 1, step)]
        else:
            ticks = [(y0 + k * (y1 - y0) / 4, f"{y0 + k * (y1 - y0) / 4:.3g}") for k in range(5)]
        for v, label in ticks:
            out.append(f'<text x="{_L - 6}" y="{_fmt(py(v) + 4)}" text-anchor="end">{label}</text>')
            out.append(
                f'<line x1="{_L}" y1="{_fmt(py(v))}" x2="{_W - _R}" y2="{_fmt(py(v))}" '
                'stroke="#dddddd" stroke-width="0.5"/>'
            )
        out.append(f'<text x="{_W / 2}" y="{_H - 12}" text-anchor="middle">{escape(self.xlabel)}</text>')
        out.append(
            f'<text x="16" y="{_H / 2}" text-anchor="middle" transform="rotate(-90 16 {_H / 2})">'
            f"{escape(self.ylabel)}</text>"
        )
        for x, y, color, dashed in self.lines:
            pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px(x), py(y)))
            dash = ' stroke-dasharray="5,4"' if dashed else ""
            out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.2"{dash}/>')
        for x, y, symbol in self.marks:
            for a, b in zip(px(x), py(y)):
                if symbol == "o":
                    out.append(f'<circle cx="{_fmt(a)}" cy="{_fmt(b)}" r="3.5" fill="none" stroke="black"/>')
                else:
                    out.append(f'<text x="{_fmt(a)}" y="{_fmt(b + 5)}" text-anchor="middle" font-size="16">*</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"
