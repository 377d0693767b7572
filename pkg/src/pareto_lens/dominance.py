"""Pareto-dominance comparison and nondominated filtering.

All comparisons assume the canonical minimization sense, i.e. they operate
on ``SolutionSet.values``.  Filtering is plain O(n^2) pairwise comparison:
at desk scale this is fast enough and trivially trustworthy.
"""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .core import SolutionSet
from .errors import DimensionError

__all__ = ["DominanceRelation", "SetDominance", "compare", "nondominated_filter", "set_dominance"]


class DominanceRelation(enum.Enum):
    FIRST_DOMINATES = "first_dominates"
    SECOND_DOMINATES = "second_dominates"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


class SetDominance(enum.Enum):
    S1_DOMINATES = "S1_dominates"
    S2_DOMINATES = "S2_dominates"
    NEITHER = "neither"


def compare(a: Sequence[float], b: Sequence[float]) -> DominanceRelation:
    """Pareto-compare two objective vectors (minimization sense).

    ``FIRST_DOMINATES`` iff a <= b componentwise and a != b; equal vectors
    do not dominate each other.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionError(f"cannot compare vectors of shapes {a.shape} and {b.shape}")
    a_better = bool((a < b).any())
    b_better = bool((b < a).any())
    if a_better and b_better:
        return DominanceRelation.INCOMPARABLE
    if a_better:
        return DominanceRelation.FIRST_DOMINATES
    if b_better:
        return DominanceRelation.SECOND_DOMINATES
    return DominanceRelation.EQUAL


def _dominates_matrix(values: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Boolean (len(values), len(others)) matrix: row i strictly dominates col j."""
    le = (values[:, None, :] <= others[None, :, :]).all(axis=2)
    lt = (values[:, None, :] < others[None, :, :]).any(axis=2)
    return le & lt


def nondominated_filter(s: SolutionSet) -> SolutionSet:
    """Keep exactly the solutions not dominated by any other member.

    Input order is preserved and exact duplicates of a retained solution
    are all retained (duplicates never dominate each other).
    """
    dom = _dominates_matrix(s.values, s.values)
    dominated = dom.any(axis=0)
    keep = [i for i in range(s.n) if not dominated[i]]
    return s.take(keep)


def _covers(a: np.ndarray, b: np.ndarray) -> bool:
    """True if every row of b is dominated by or equal to some row of a."""
    dom = _dominates_matrix(a, b)
    eq = (a[:, None, :] == b[None, :, :]).all(axis=2)
    return bool((dom | eq).any(axis=0).all())


def set_dominance(s1: SolutionSet, s2: SolutionSet) -> SetDominance:
    """Whole-set dominance: S1 dominates iff it covers S2 but not vice versa.

    Covering means every member of the other set is dominated by or equal
    to some member of this set.
    """
    if s1.m != s2.m:
        raise DimensionError(f"objective counts differ: {s1.m} vs {s2.m}")
    c12 = _covers(s1.values, s2.values)
    c21 = _covers(s2.values, s1.values)
    if c12 and not c21:
        return SetDominance.S1_DOMINATES
    if c21 and not c12:
        return SetDominance.S2_DOMINATES
    return SetDominance.NEITHER
