"""Deterministic parallel-coordinates rendering to SVG 1.1.

Each solution becomes one polyline over m equally spaced vertical axes;
the vertex on an axis sits at the height of the (normalized) value of the
objective displayed there, larger values higher.  Output is byte-stable:
fixed element order (axes, polylines, labels), fixed 2-decimal coordinate
formatting, no timestamps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .core import NormalizationMode, SolutionSet
from .errors import DegenerateAxisError, DimensionError, PermutationError

__all__ = [
    "GroupStyle",
    "PlotSpec",
    "SvgDocument",
    "render",
    "render_comparison",
    "segment_signature",
]

DEFAULT_COLOR = "#1f77b4"
DEFAULT_OPACITY = 0.35
COMPARISON_OPACITY = 0.8
PALETTE8 = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_HEX_COLOR = re.compile(r"^#[0-9a-fA-F]{6}$")
_POLYLINE_POINTS = re.compile(r'<polyline[^>]*\spoints="([^"]*)"')


@dataclass(frozen=True)
class GroupStyle:
    """Stroke styling for one group of solutions."""

    label: str
    color: str
    opacity: float

    def __post_init__(self):
        if not _HEX_COLOR.match(self.color):
            raise ValueError(f"color must be 6-digit hex like #1f77b4, got {self.color!r}")
        if not 0 < self.opacity <= 1:
            raise ValueError(f"opacity must be in (0, 1], got {self.opacity}")


@dataclass(frozen=True)
class PlotSpec:
    """Rendering configuration; defaults give a readable standalone plot."""

    width: int = 900
    height: int = 560
    margins: tuple[int, int, int, int] = (40, 40, 48, 40)  # top, right, bottom, left
    normalization: NormalizationMode = field(default_factory=NormalizationMode.per_axis_minmax)
    axis_order: Optional[tuple[int, ...]] = None  # None = identity
    groups: Optional[tuple[int, ...]] = None      # per-solution index into group_styles
    group_styles: Optional[tuple[GroupStyle, ...]] = None
    stroke_width: float = 1.2
    show_ticks: bool = True
    title: Optional[str] = None

    def __post_init__(self):
        top, right, bottom, left = self.margins
        if min(self.margins) < 0:
            raise ValueError("margins must be nonnegative")
        if self.width - left - right <= 0 or self.height - top - bottom <= 0:
            raise ValueError("margins leave no drawable area")
        if self.stroke_width <= 0:
            raise ValueError("stroke_width must be positive")
        if (self.groups is None) != (self.group_styles is None):
            raise ValueError("groups and group_styles must be given together")


@dataclass(frozen=True)
class SvgDocument:
    """A complete, standalone SVG 1.1 document."""

    text: str

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.text, encoding="utf-8")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick(x: float) -> str:
    return f"{x:.6g}"


def _display_order(spec: PlotSpec, m: int) -> tuple[int, ...]:
    if spec.axis_order is None:
        return tuple(range(m))
    order = tuple(int(v) for v in spec.axis_order)
    if sorted(order) != list(range(m)):
        raise PermutationError(f"axis_order {order} is not a permutation of 0..{m - 1}")
    return order


def _resolve_bounds(s: SolutionSet, spec: PlotSpec) -> list[tuple[float, float]]:
    """Per-objective (lo, hi) vertical bounds, indexed by original objective."""
    raw = s.raw_values
    mode = spec.normalization
    if mode.kind == "per_axis_minmax":
        bounds = []
        for j in range(s.m):
            lo, hi = float(raw[:, j].min()), float(raw[:, j].max())
            if lo == hi:
                raise DegenerateAxisError(
                    s.objective_names[j], "use explicit bounds or shared-scale mode"
                )
            bounds.append((lo, hi))
        return bounds
    if mode.kind == "none":
        lo, hi = float(raw.min()), float(raw.max())
        if lo == hi:  # all values identical: center them on an arbitrary unit span
            lo, hi = lo - 0.5, hi + 0.5
        return [(lo, hi)] * s.m
    if mode.kind == "explicit":
        if mode.bounds is None or len(mode.bounds) != s.m:
            raise DimensionError(
                f"explicit bounds must cover all {s.m} objectives"
            )
        return list(mode.bounds)
    raise ValueError(f"unknown normalization mode {mode.kind!r}")


@dataclass(frozen=True)
class Layout:
    """Pixel geometry of a render: axis x positions (display order),
    vertical span, and per-display-axis value bounds."""

    xs: tuple[float, ...]
    y_top: float
    y_bottom: float
    bounds: tuple[tuple[float, float], ...]

    def y_of(self, t: int, value: float) -> float:
        lo, hi = self.bounds[t]
        frac = (value - lo) / (hi - lo)
        return self.y_bottom - frac * (self.y_bottom - self.y_top)


def layout(s: SolutionSet, spec: PlotSpec) -> Layout:
    """Compute the plot geometry used by :func:`render` (also handy for
    inverting emitted coordinates back to data values in tests)."""
    order = _display_order(spec, s.m)
    bounds = _resolve_bounds(s, spec)
    top, right, bottom, left = spec.margins
    inner_w = spec.width - left - right
    xs = tuple(left + inner_w * t / (s.m - 1) for t in range(s.m))
    return Layout(
        xs=xs,
        y_top=float(top),
        y_bottom=float(spec.height - bottom),
        bounds=tuple(bounds[j] for j in order),
    )


def _solution_styles(s: SolutionSet, spec: PlotSpec) -> list[tuple[str, float]]:
    if spec.groups is None:
        return [(DEFAULT_COLOR, DEFAULT_OPACITY)] * s.n
    if len(spec.groups) != s.n:
        raise DimensionError(f"{len(spec.groups)} group labels for {s.n} solutions")
    styles = []
    for g in spec.groups:
        if not 0 <= g < len(spec.group_styles):
            raise DimensionError(f"group index {g} has no style")
        gs = spec.group_styles[g]
        styles.append((gs.color, gs.opacity))
    return styles


def render(s: SolutionSet, spec: PlotSpec = PlotSpec()) -> SvgDocument:
    """Render one solution set as a parallel-coordinates SVG document."""
    order = _display_order(spec, s.m)
    lay = layout(s, spec)
    raw = s.raw_values
    styles = _solution_styles(s, spec)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
    ]
    if spec.title is not None:
        parts.append(f"<title>{escape(spec.title)}</title>")

    for x in lay.xs:
        parts.append(
            f'<line class="axis" x1="{_fmt(x)}" y1="{_fmt(lay.y_top)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(lay.y_bottom)}" '
            f'stroke="#333333" stroke-width="1"/>'
        )

    for idx in range(s.n):
        pts = " ".join(
            f"{_fmt(lay.xs[t])},{_fmt(lay.y_of(t, raw[idx, j]))}"
            for t, j in enumerate(order)
        )
        color, opacity = styles[idx]
        parts.append(
            f'<polyline class="solution" points="{pts}" fill="none" '
            f'stroke="{color}" stroke-opacity="{opacity:g}" '
            f'stroke-width="{spec.stroke_width:g}"/>'
        )

    label_y = lay.y_bottom + 30
    for t, j in enumerate(order):
        parts.append(
            f'<text class="axis-label" x="{_fmt(lay.xs[t])}" y="{_fmt(label_y)}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="12">'
            f"{escape(s.objective_names[j])}</text>"
        )
    if spec.show_ticks:
        for t in range(s.m):
            lo, hi = lay.bounds[t]
            parts.append(
                f'<text class="tick" x="{_fmt(lay.xs[t])}" y="{_fmt(lay.y_top - 6)}" '
                f'text-anchor="middle" font-family="sans-serif" font-size="10">'
                f"{_tick(hi)}</text>"
            )
            parts.append(
                f'<text class="tick" x="{_fmt(lay.xs[t])}" y="{_fmt(lay.y_bottom + 14)}" '
                f'text-anchor="middle" font-family="sans-serif" font-size="10">'
                f"{_tick(lo)}</text>"
            )
    if spec.group_styles is not None:
        top, right, bottom, left = spec.margins
        for g, gs in enumerate(spec.group_styles):
            parts.append(
                f'<text class="group-label" x="{_fmt(left)}" y="{_fmt(16 + 14 * g)}" '
                f'font-family="sans-serif" font-size="11" fill="{gs.color}">'
                f"{escape(gs.label)}</text>"
            )
    if spec.title is not None:
        parts.append(
            f'<text class="title" x="{_fmt(spec.width / 2)}" y="18" '
            f'text-anchor="middle" font-family="sans-serif" font-size="13">'
            f"{escape(spec.title)}</text>"
        )
    parts.append("</svg>")
    return SvgDocument("\n".join(parts) + "\n")


def render_comparison(
    s1: SolutionSet,
    s2: SolutionSet,
    spec: PlotSpec = PlotSpec(),
    labels: tuple[str, str] = ("set 1", "set 2"),
) -> SvgDocument:
    """Render two sets on shared axes with shared union normalization.

    Set 1 draws first, set 2 over it, in palette order.
    """
    if s1.m != s2.m:
        raise DimensionError(f"objective counts differ: {s1.m} vs {s2.m}")
    combined = SolutionSet(
        np.vstack([s1.raw_values, s2.raw_values]), s1.objective_names
    )
    mode = spec.normalization
    if mode.kind == "per_axis_minmax":
        raw = combined.raw_values
        bounds = []
        for j in range(combined.m):
            lo, hi = float(raw[:, j].min()), float(raw[:, j].max())
            if lo == hi:
                raise DegenerateAxisError(
                    combined.objective_names[j], "constant across the union of both sets"
                )
            bounds.append((lo, hi))
        mode = NormalizationMode.explicit(bounds)
    styles = tuple(
        GroupStyle(label, PALETTE8[g % len(PALETTE8)], COMPARISON_OPACITY)
        for g, label in enumerate(labels)
    )
    spec = PlotSpec(
        width=spec.width,
        height=spec.height,
        margins=spec.margins,
        normalization=mode,
        axis_order=spec.axis_order,
        groups=tuple([0] * s1.n + [1] * s2.n),
        group_styles=styles,
        stroke_width=spec.stroke_width,
        show_ticks=spec.show_ticks,
        title=spec.title,
    )
    return render(combined, spec)


def segment_signature(doc: SvgDocument) -> str:
    """Canonical serialization of the drawn segment multiset.

    Polylines are split into their per-gap segments, which are sorted and
    joined one per line; two renders draw the same picture iff their
    signatures are byte-identical.  This is the order-insensitive geometry
    the plot actually shows (distinct sets can share it).
    """
    segments = []
    for points in _POLYLINE_POINTS.findall(doc.text):
        verts = points.split(" ")
        segments.extend(f"{a} {b}" for a, b in zip(verts, verts[1:]))
    return "\n".join(sorted(segments))
