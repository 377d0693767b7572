"""Point-line duality between Cartesian and parallel-coordinates views.

A Cartesian line f_j = k*f_i + b corresponds to a single dual point
rho = (1/(1-k), b/(1-k)) through which the plot segments of all its points
pass (axis gap taken as unit width, left axis at u=0).  The slope taxonomy
classifies where that point lands relative to the two axes, and
:func:`detect_linear_dependence` uses a least-squares fit plus sampled
segment intersections to flag linearly dependent objective pairs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .core import SolutionSet
from .errors import (
    DegenerateRegressionError,
    DegenerateSegmentsError,
    InsufficientDataError,
    ParallelLinesError,
    VerticalLineError,
)

__all__ = [
    "LineParams",
    "DualPoint",
    "SegmentCrossing",
    "SlopeClass",
    "DependenceVerdict",
    "DualityReport",
    "rho_from_line",
    "line_from_rho",
    "segment_intersection",
    "classify_slope",
    "detect_linear_dependence",
]

PARALLEL_SLOPE_TOL = 1e-9
SAMPLE_CAP = 1000


@dataclass(frozen=True)
class LineParams:
    """Cartesian relation f_j = k*f_i + b; vertical lines are not
    representable here (they map to the on-left-axis slope class)."""

    k: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and math.isfinite(self.b)):
            raise ValueError(f"line parameters must be finite, got k={self.k}, b={self.b}")


@dataclass(frozen=True)
class DualPoint:
    """Point in the plot plane: u in axis-gap units (left axis 0, right
    axis 1, values outside [0,1] meaningful), v in data units."""

    u: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise ValueError(f"dual point must be finite, got ({self.u}, {self.v})")


@dataclass(frozen=True)
class SegmentCrossing:
    """Where two plot segments (or their extensions) meet."""

    point: DualPoint
    inside: bool  # True iff 0 < u < 1, strictly between the axes


class SlopeClass(enum.Enum):
    BETWEEN_AXES = "between_axes"      # k < 0, crossing strictly between the axes
    MIDWAY = "midway"                  # k = -1, crossing exactly halfway
    LEFT_OF_LEFT = "left_of_left"      # k > 1
    RIGHT_OF_RIGHT = "right_of_right"  # 0 < k < 1
    ON_LEFT_AXIS = "on_left_axis"      # vertical line (k infinite)
    ON_RIGHT_AXIS = "on_right_axis"    # k = 0
    PARALLEL = "parallel"              # k = 1, no finite dual point


class DependenceVerdict(enum.Enum):
    NEGATIVELY_LINEAR = "negatively_linear"
    POSITIVELY_LINEAR = "positively_linear"
    PARALLEL_LINEAR = "parallel_linear"
    NONE = "none"


@dataclass(frozen=True)
class DualityReport:
    """Fitted linear relation between one objective pair and the
    intersection-point evidence backing the verdict."""

    pair: tuple[int, int]
    fitted: LineParams
    r_squared: float
    slope_class: SlopeClass
    intersection_spread: float
    verdict: DependenceVerdict
    sampled_pairs: int
    seed: int


def rho_from_line(line: LineParams) -> DualPoint:
    """Dual point of a Cartesian line: (1/(1-k), b/(1-k))."""
    if line.k == 1:
        raise ParallelLinesError(
            "k=1: the plot segments are parallel, there is no finite dual point"
        )
    inv = 1.0 / (1.0 - line.k)
    return DualPoint(inv, line.b * inv)


def line_from_rho(point: DualPoint) -> LineParams:
    """Inverse map: k = 1 - 1/u, b = v/u."""
    if point.u == 0:
        raise VerticalLineError("u=0 corresponds to a vertical Cartesian line")
    return LineParams(1.0 - 1.0 / point.u, point.v / point.u)


def segment_intersection(
    p_i: float, p_j: float, q_i: float, q_j: float
) -> Optional[SegmentCrossing]:
    """Crossing of the plot segments (0,p_i)-(1,p_j) and (0,q_i)-(1,q_j).

    Returns None when the segments are parallel (p_i - q_i == p_j - q_j);
    raises :class:`DegenerateSegmentsError` when they are identical.  The
    crossing of the extended lines is returned with ``inside=False`` when
    it falls outside the axis gap.
    """
    if p_i == q_i and p_j == q_j:
        raise DegenerateSegmentsError("identical segments intersect everywhere")
    denom = (p_j - q_j) - (p_i - q_i)
    if denom == 0:
        return None
    u = (q_i - p_i) / denom
    # averaging both anchors keeps the result bit-identical under swapping
    v = 0.5 * ((p_i + u * (p_j - p_i)) + (q_i + u * (q_j - q_i)))
    return SegmentCrossing(DualPoint(u, v), inside=0.0 < u < 1.0)


def classify_slope(k: float) -> SlopeClass:
    """Total slope taxonomy; pass +/-inf for a vertical line."""
    if math.isnan(k):
        raise ValueError("slope must be a real number or +/-inf")
    if math.isinf(k):
        return SlopeClass.ON_LEFT_AXIS
    if k == -1:
        return SlopeClass.MIDWAY
    if k < 0:
        return SlopeClass.BETWEEN_AXES
    if k == 0:
        return SlopeClass.ON_RIGHT_AXIS
    if k == 1:
        return SlopeClass.PARALLEL
    if k < 1:
        return SlopeClass.RIGHT_OF_RIGHT
    return SlopeClass.LEFT_OF_LEFT


def _normalized_column(col: np.ndarray) -> np.ndarray:
    lo, hi = col.min(), col.max()
    return (col - lo) / (hi - lo)


def _sample_pairs(n: int, cap: int, seed: int) -> list[tuple[int, int]]:
    if n * (n - 1) // 2 <= cap:
        return list(combinations(range(n), 2))
    rng = np.random.Generator(np.random.PCG64(seed))
    seen = set()
    while len(seen) < cap:
        a, b = rng.integers(0, n, size=2)
        if a == b:
            continue
        pair = (int(min(a, b)), int(max(a, b)))
        seen.add(pair)
    return sorted(seen)


def detect_linear_dependence(
    s: SolutionSet,
    i: int,
    j: int,
    fit_threshold: float = 0.999,
    seed: int = 0,
) -> DualityReport:
    """Least-squares fit of objective j on objective i plus crossing evidence.

    The fit runs on problem-unit values; the intersection spread (max
    pairwise distance among sampled extended crossings) is measured after
    per-axis min-max normalization, matching what a viewer of a normalized
    plot sees.  The verdict requires r^2 >= ``fit_threshold``.
    """
    if s.n < 3:
        raise InsufficientDataError("linear-dependence detection needs at least 3 solutions")
    raw = s.raw_values
    x = raw[:, i]
    y = raw[:, j]
    for idx, col in ((i, x), (j, y)):
        if col.min() == col.max():
            raise DegenerateRegressionError(
                f"objective {s.objective_names[idx]!r} is constant, cannot fit a line"
            )

    xm, ym = x.mean(), y.mean()
    k = float(((x - xm) * (y - ym)).sum() / ((x - xm) ** 2).sum())
    b = float(ym - k * xm)
    ss_res = float(((y - (k * x + b)) ** 2).sum())
    ss_tot = float(((y - ym) ** 2).sum())
    r_squared = max(0.0, 1.0 - ss_res / ss_tot)

    xn = _normalized_column(x)
    yn = _normalized_column(y)
    pairs = _sample_pairs(s.n, SAMPLE_CAP, seed)
    points = []
    for a, c in pairs:
        try:
            crossing = segment_intersection(xn[a], yn[a], xn[c], yn[c])
        except DegenerateSegmentsError:
            continue
        if crossing is not None:
            points.append((crossing.point.u, crossing.point.v))
    spread = 0.0
    if len(points) >= 2:
        pts = np.array(points)
        diffs = pts[:, None, :] - pts[None, :, :]
        spread = float(np.sqrt((diffs * diffs).sum(axis=2)).max())

    if r_squared >= fit_threshold:
        if k < 0:
            verdict = DependenceVerdict.NEGATIVELY_LINEAR
        elif abs(k - 1.0) <= PARALLEL_SLOPE_TOL:
            verdict = DependenceVerdict.PARALLEL_LINEAR
        elif k > 0:
            verdict = DependenceVerdict.POSITIVELY_LINEAR
        else:
            verdict = DependenceVerdict.NONE
    else:
        verdict = DependenceVerdict.NONE

    return DualityReport(
        pair=(i, j),
        fitted=LineParams(k, b),
        r_squared=r_squared,
        slope_class=classify_slope(k),
        intersection_spread=spread,
        verdict=verdict,
        sampled_pairs=len(pairs),
        seed=seed,
    )
