"""Quality measures for solution sets.

Convergence (dominance-compatible generational distance), uniformity
(Spacing, plus the dominance-modified pairwise variant), extensity
(maximum spread) and a grid-based coverage comparison, plus per-axis reach
reporting.  All quality computations use canonical minimization values;
range and gap reports are in problem units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import SolutionSet
from .dominance import SetDominance, set_dominance
from .errors import DegenerateAxisError, DimensionError, InsufficientDataError

__all__ = [
    "MetricReport",
    "CoverageReport",
    "AxisReach",
    "gd_plus",
    "spacing",
    "spacing_pairwise",
    "maximum_spread",
    "grid_coverage",
    "axis_reach",
    "summarize",
]

DEFAULT_GAP_THRESHOLD = 0.1


@dataclass(frozen=True)
class AxisReach:
    """Envelope and unreached internal intervals of one objective."""

    objective: str
    minimum: float
    maximum: float
    gaps: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class MetricReport:
    """Scalar quality summary of one solution set."""

    spacing: float
    maximum_spread: float
    per_axis_range: tuple[tuple[float, float], ...]
    gd_plus: Optional[float] = None


@dataclass(frozen=True)
class CoverageReport:
    """Grid-coverage comparison of two sets sharing one normalized grid.

    ``per_axis_gaps`` lists the internal regions (in problem units) that
    neither set reaches, measured on the union of both sets.
    """

    divisions: int
    covered_fraction_1: float
    covered_fraction_2: float
    per_axis_gaps: tuple[AxisReach, ...]


def gd_plus(s: SolutionSet, ref: SolutionSet) -> float:
    """Dominance-compatible generational distance of ``s`` against ``ref``.

    Mean over solutions of the smallest clamped distance
    sqrt(sum_i max(s_i - r_i, 0)^2) to any reference point; moving a
    solution closer to (or past) the reference never increases the value.
    """
    if s.m != ref.m:
        raise DimensionError(f"objective counts differ: {s.m} vs {ref.m}")
    diff = s.values[:, None, :] - ref.values[None, :, :]
    np.maximum(diff, 0.0, out=diff)
    dist = np.sqrt((diff * diff).sum(axis=2))
    return float(dist.min(axis=1).mean())


def _nearest_l1(values: np.ndarray) -> np.ndarray:
    d = np.abs(values[:, None, :] - values[None, :, :]).sum(axis=2)
    np.fill_diagonal(d, np.inf)
    return d.min(axis=1)


def spacing(s: SolutionSet) -> float:
    """Schott's Spacing: standard deviation of nearest-neighbor L1 distances."""
    if s.n < 2:
        raise InsufficientDataError("spacing needs at least 2 solutions")
    d = _nearest_l1(s.values)
    mean = d.mean()
    return float(np.sqrt(((mean - d) ** 2).sum() / (s.n - 1)))


def spacing_pairwise(s1: SolutionSet, s2: SolutionSet) -> tuple[float, float]:
    """Spacing of two sets, dominance-modified: if one set Pareto-dominates
    the other, the dominating set scores 0 and the dominated set scores 1."""
    if s1.n < 2 or s2.n < 2:
        raise InsufficientDataError("spacing needs at least 2 solutions per set")
    relation = set_dominance(s1, s2)
    if relation is SetDominance.S1_DOMINATES:
        return (0.0, 1.0)
    if relation is SetDominance.S2_DOMINATES:
        return (1.0, 0.0)
    return (spacing(s1), spacing(s2))


def maximum_spread(s: SolutionSet) -> float:
    """Euclidean norm of the per-objective range vector."""
    ranges = s.values.max(axis=0) - s.values.min(axis=0)
    return float(np.sqrt((ranges * ranges).sum()))


def _boxes(values: np.ndarray, lo: np.ndarray, span: np.ndarray, divisions: int) -> set:
    scaled = (values - lo) / span
    idx = np.clip(np.floor(scaled * divisions).astype(int), 0, divisions - 1)
    return set(map(tuple, idx))


def grid_coverage(
    s1: SolutionSet,
    s2: SolutionSet,
    divisions: int = 8,
    gap_threshold: float = DEFAULT_GAP_THRESHOLD,
) -> CoverageReport:
    """Compare which hyperboxes of a shared normalized grid each set occupies.

    Both sets are normalized jointly by the union's per-axis min/max and
    binned into ``divisions`` cells per axis; each covered fraction is the
    share of jointly occupied boxes that the corresponding set reaches
    (bigger is better, 1.0 means it covers everything the pair covers).
    """
    if s1.m != s2.m:
        raise DimensionError(f"objective counts differ: {s1.m} vs {s2.m}")
    if divisions < 2:
        raise ValueError("divisions must be >= 2")
    union = np.vstack([s1.values, s2.values])
    lo = union.min(axis=0)
    hi = union.max(axis=0)
    for j in range(s1.m):
        if lo[j] == hi[j]:
            raise DegenerateAxisError(
                s1.objective_names[j], "constant across the union of both sets"
            )
    span = hi - lo
    b1 = _boxes(s1.values, lo, span, divisions)
    b2 = _boxes(s2.values, lo, span, divisions)
    total = len(b1 | b2)
    combined = SolutionSet(
        np.vstack([s1.raw_values, s2.raw_values]), s1.objective_names
    )
    return CoverageReport(
        divisions=divisions,
        covered_fraction_1=len(b1) / total,
        covered_fraction_2=len(b2) / total,
        per_axis_gaps=tuple(axis_reach(combined, gap_threshold)),
    )


def axis_reach(
    s: SolutionSet, gap_threshold: float = DEFAULT_GAP_THRESHOLD
) -> list[AxisReach]:
    """Per-objective envelope plus internal gaps wider than
    ``gap_threshold`` times the axis range (problem units)."""
    if gap_threshold <= 0:
        raise ValueError("gap_threshold must be positive")
    raw = s.raw_values
    out = []
    for j in range(s.m):
        vals = np.sort(raw[:, j])
        lo, hi = float(vals[0]), float(vals[-1])
        cut = gap_threshold * (hi - lo)
        gaps = [
            (float(a), float(b))
            for a, b in zip(vals[:-1], vals[1:])
            if b - a > cut
        ]
        out.append(AxisReach(s.objective_names[j], lo, hi, tuple(gaps)))
    return out


def summarize(s: SolutionSet, ref: Optional[SolutionSet] = None) -> MetricReport:
    """One-stop scalar report; GD+ is included when a reference set is given."""
    raw = s.raw_values
    ranges = tuple(
        (float(raw[:, j].min()), float(raw[:, j].max())) for j in range(s.m)
    )
    return MetricReport(
        spacing=spacing(s) if s.n >= 2 else 0.0,
        maximum_spread=maximum_spread(s),
        per_axis_range=ranges,
        gd_plus=None if ref is None else gd_plus(s, ref),
    )
