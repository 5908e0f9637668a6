"""SVG drawings of 1-D realizations and of planar simplex-atom constructions.

Closed endpoints are filled discs, open endpoints hollow discs, and an
open edge of a triangle atom is dashed. Output is plain text and
byte-stable for a fixed :class:`RenderSpec`; rational coordinates are
converted to floats only when a pixel coordinate is written.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .construction import ConstructedRealization, Stimulus
from .errors import DimensionTooHigh
from .intervals import NEG_INF, POS_INF, Line, Realization1D

INK = "#222222"
FILL = "#6a8fc7"


@dataclass(frozen=True)
class RenderSpec:
    width: int = 520
    height: int | None = None  # derived from content when None
    margin: int = 40
    track_gap: int = 44
    panel: int = 150
    marker: float = 4.5


def _f(x: float | Fraction) -> str:
    return f"{float(x):.2f}"


def _header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="serif" font-size="13">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="8" refY="5" markerWidth="7" '
        f'markerHeight="7" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="{INK}"/></marker>',
        "</defs>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _disc(x: float, y: float, r: float, closed: bool) -> str:
    fill = INK if closed else "white"
    return f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(r)}" fill="{fill}" stroke="{INK}" stroke-width="1.5"/>'


def _text(x: float, y: float, label: str, anchor: str = "start") -> str:
    return f'<text x="{_f(x)}" y="{_f(y)}" text-anchor="{anchor}" fill="{INK}">{escape(label)}</text>'


def render_svg_1d(r: Realization1D, spec: RenderSpec = RenderSpec()) -> str:
    """One horizontal track per neuron on a shared x-scale."""
    label_w = 44
    height = spec.height or (2 * spec.margin + max(r.n, 1) * spec.track_gap + 24)
    left = spec.margin + label_w
    right = spec.width - spec.margin

    pts = r.endpoints()
    lo, hi = (pts[0], pts[-1]) if pts else (Fraction(0), Fraction(1))
    pad = (hi - lo) / 8 if hi > lo else Fraction(1)
    lo, hi = lo - pad, hi + pad

    def sx(x: Fraction) -> float:
        return left + float((x - lo) / (hi - lo)) * (right - left)

    out = _header(spec.width, height)
    frame = "whole line" if r.stimulus is Line.WHOLE_LINE else "union of intervals"
    out.append(_text(spec.margin, spec.margin - 14, f"X = {frame}"))

    axis_y = spec.margin + r.n * spec.track_gap + 8
    out.append(f'<line x1="{_f(left)}" y1="{_f(axis_y)}" x2="{_f(right)}" y2="{_f(axis_y)}" stroke="#888888"/>')
    for p in pts:
        x = sx(p)
        out.append(f'<line x1="{_f(x)}" y1="{_f(axis_y - 4)}" x2="{_f(x)}" y2="{_f(axis_y + 4)}" stroke="#888888"/>')
        out.append(_text(x, axis_y + 18, str(p), "middle"))

    for j, iv in enumerate(r.intervals, start=1):
        y = spec.margin + (j - 1) * spec.track_gap + spec.track_gap / 2
        out.append(_text(spec.margin, y + 4, f"I{j}"))
        if iv.empty:
            out.append(_text(left, y + 4, "∅"))
            continue
        x0 = float(left) if iv.lo == NEG_INF else sx(iv.lo)  # type: ignore[arg-type]
        x1 = float(right) if iv.hi == POS_INF else sx(iv.hi)  # type: ignore[arg-type]
        marks = []
        if iv.lo == NEG_INF:
            marks.append('marker-start="url(#arrow)"')
        if iv.hi == POS_INF:
            marks.append('marker-end="url(#arrow)"')
        extra = (" " + " ".join(marks)) if marks else ""
        out.append(
            f'<line x1="{_f(x0)}" y1="{_f(y)}" x2="{_f(x1)}" y2="{_f(y)}" stroke="{INK}" stroke-width="2.5"{extra}/>'
        )
        if iv.lo != NEG_INF:
            out.append(_disc(x0, y, spec.marker, iv.lo_closed))
        if iv.hi != POS_INF and not (iv.lo == iv.hi):
            out.append(_disc(x1, y, spec.marker, iv.hi_closed))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _panel_atoms(atoms: frozenset[int], ox: float, oy: float, size: float, marker: float) -> list[str]:
    """Atoms of one receptive field, origin at (ox, oy), e_1 right, e_2 up."""
    e1 = (ox + size, oy)
    e2 = (ox, oy - size)
    out = []
    if 3 in atoms:
        out.append(
            f'<polygon points="{_f(ox)},{_f(oy)} {_f(e1[0])},{_f(e1[1])} {_f(e2[0])},{_f(e2[1])}" '
            f'fill="{FILL}" fill-opacity="0.55" stroke="none"/>'
        )
        out.append(f'<line x1="{_f(e1[0])}" y1="{_f(e1[1])}" x2="{_f(e2[0])}" y2="{_f(e2[1])}" stroke="{INK}" stroke-width="2"/>')
        out.append(f'<line x1="{_f(e2[0])}" y1="{_f(e2[1])}" x2="{_f(ox)}" y2="{_f(oy)}" stroke="{INK}" stroke-width="2"/>')
        out.append(
            f'<line x1="{_f(ox)}" y1="{_f(oy)}" x2="{_f(e1[0])}" y2="{_f(e1[1])}" stroke="{INK}" '
            'stroke-width="2" stroke-dasharray="5,4"/>'
        )
    if 2 in atoms:
        out.append(f'<line x1="{_f(ox)}" y1="{_f(oy)}" x2="{_f(e1[0])}" y2="{_f(e1[1])}" stroke="{INK}" stroke-width="2.5"/>')
        out.append(_disc(e1[0], e1[1], marker, True))
        out.append(_disc(ox, oy, marker, False))
    if 1 in atoms:
        out.append(_disc(ox, oy, marker, True))
    return out


def render_svg_2d(r: ConstructedRealization, spec: RenderSpec = RenderSpec()) -> str:
    """One panel per neuron showing its union of atoms, inside the stimulus frame."""
    if r.ambient_dim > 2:
        raise DimensionTooHigh(f"planar drawing needs ambient dimension <= 2, got {r.ambient_dim} (k={r.k})")
    gap = 30
    cell = spec.panel + gap
    width = max(spec.width, 2 * spec.margin + max(r.n, 1) * cell - gap)
    height = spec.height or (2 * spec.margin + spec.panel + 40)
    out = _header(width, height)

    frame_dash = "" if r.stimulus is Stimulus.WHOLE_SPACE else ' stroke-dasharray="3,3"'
    label = f"X = R^{r.ambient_dim}" if r.stimulus is Stimulus.WHOLE_SPACE else "X = union of the U_j"
    out.append(
        f'<rect x="{spec.margin / 2:.2f}" y="{spec.margin / 2:.2f}" width="{width - spec.margin:.2f}" '
        f'height="{height - spec.margin:.2f}" fill="none" stroke="#999999"{frame_dash}/>'
    )
    out.append(_text(spec.margin / 2 + 6, spec.margin / 2 + 16, label))

    inner = spec.panel * 0.7
    for j, atoms in enumerate(r.atoms_per_neuron, start=1):
        px = spec.margin + (j - 1) * cell
        py = spec.margin + 20
        out.append(
            f'<rect x="{_f(px)}" y="{_f(py)}" width="{_f(spec.panel)}" height="{_f(spec.panel)}" '
            'fill="none" stroke="#dddddd"/>'
        )
        ox = px + (spec.panel - inner) / 2
        oy = py + spec.panel - (spec.panel - inner) / 2
        if r.ambient_dim == 1:
            oy = py + spec.panel / 2
        out.extend(_panel_atoms(atoms, ox, oy, inner, spec.marker))
        out.append(_text(px + spec.panel / 2, py + spec.panel + 18, f"U{j}", "middle"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
