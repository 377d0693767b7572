"""Objective conflict quantification and axis-order optimization.

Conflict between two objectives is the fraction of solution pairs whose
values are strictly discordantly ordered -- exactly the pairs whose plot
segments cross between adjacent axes.  Ties count in the denominator but
never in the numerator, which makes the degree invariant under any
strictly monotone rescaling of an objective.

Counting uses merge-sort inversion counting (O(n log n), ties handled
exactly); a brute-force path is kept for small sets and as an oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .core import SolutionSet
from .errors import InsufficientDataError, PermutationError, SearchSizeError

__all__ = [
    "ConflictMatrix",
    "AxisOrder",
    "OrderMode",
    "crossing_count",
    "conflict_matrix",
    "harmonious_pairs",
    "clutter",
    "order_axes",
    "relationship_budget",
]

BRUTE_FORCE_LIMIT = 64
EXHAUSTIVE_LIMIT = 9


class OrderMode(enum.Enum):
    MAX_HARMONY = "max_harmony"
    MAX_CONFLICT = "max_conflict"
    MIN_CLUTTER = "min_clutter"


@dataclass(frozen=True)
class ConflictMatrix:
    """Symmetric m-by-m matrix of pairwise conflict degrees in [0, 1]."""

    m: int
    degree: np.ndarray

    def __post_init__(self):
        d = self.degree
        if d.shape != (self.m, self.m):
            raise PermutationError(f"degree matrix shape {d.shape} does not match m={self.m}")
        if not np.array_equal(d, d.T) or np.diagonal(d).any():
            raise PermutationError("conflict matrix must be symmetric with zero diagonal")


@dataclass(frozen=True)
class AxisOrder:
    """A display permutation of objective indices plus how it was chosen."""

    permutation: tuple[int, ...]
    mode: OrderMode
    score: float


def _merge_count(seq: list) -> tuple[list, int]:
    n = len(seq)
    if n <= 1:
        return seq, 0
    mid = n // 2
    left, inv_l = _merge_count(seq[:mid])
    right, inv_r = _merge_count(seq[mid:])
    merged = []
    inv = inv_l + inv_r
    i = j = 0
    len_l = len(left)
    while i < len_l and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            inv += len_l - i  # strictly greater: every remaining left element inverts
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inv


def _crossings_mergesort(x: np.ndarray, y: np.ndarray) -> int:
    # Sorting by (x, y) zeroes inversions inside x-tie groups and leaves
    # strict y-inversions across distinct x, i.e. the discordant pairs.
    order = sorted(range(len(x)), key=lambda t: (x[t], y[t]))
    _, inv = _merge_count([y[t] for t in order])
    return inv


def _crossings_bruteforce(x: np.ndarray, y: np.ndarray) -> int:
    p, q = np.triu_indices(len(x), k=1)
    dx = x[p] - x[q]
    dy = y[p] - y[q]
    return int(np.count_nonzero(dx * dy < 0))


def crossing_count(s: SolutionSet, i: int, j: int) -> int:
    """Number of unordered solution pairs whose segments cross strictly
    between adjacent axes i and j; pairs tied on either axis do not cross."""
    if s.n < 2:
        raise InsufficientDataError("crossing counts need at least 2 solutions")
    raw = s.raw_values
    x, y = raw[:, i], raw[:, j]
    if s.n < BRUTE_FORCE_LIMIT:
        return _crossings_bruteforce(x, y)
    return _crossings_mergesort(x, y)


def conflict_matrix(s: SolutionSet) -> ConflictMatrix:
    """Pairwise crossing counts normalized by the number of solution pairs."""
    if s.n < 2:
        raise InsufficientDataError("conflict degrees need at least 2 solutions")
    total = s.n * (s.n - 1) // 2
    degree = np.zeros((s.m, s.m))
    for i, j in combinations(range(s.m), 2):
        d = crossing_count(s, i, j) / total
        degree[i, j] = degree[j, i] = d
    degree.setflags(write=False)
    return ConflictMatrix(s.m, degree)


def harmonious_pairs(matrix: ConflictMatrix, epsilon: float = 0.0) -> list[tuple[int, int]]:
    """Objective pairs with conflict degree <= epsilon, most harmonious first."""
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    found = [
        (i, j)
        for i, j in combinations(range(matrix.m), 2)
        if matrix.degree[i, j] <= epsilon
    ]
    return sorted(found, key=lambda p: (matrix.degree[p[0], p[1]], p))


def _check_permutation(order: Sequence[int], m: int) -> tuple[int, ...]:
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(m)):
        raise PermutationError(f"{order} is not a permutation of 0..{m - 1}")
    return order


def clutter(s: SolutionSet, order: Sequence[int]) -> int:
    """Total crossings over the m-1 adjacent axis gaps of this order."""
    order = _check_permutation(order, s.m)
    return sum(crossing_count(s, a, b) for a, b in zip(order, order[1:]))


def _path_score(weights: list[list[float]], perm: Sequence[int]) -> float:
    return sum(weights[a][b] for a, b in zip(perm, perm[1:]))


def _canonical(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    return perm if perm[0] < perm[-1] else perm[::-1]


def _exhaustive(weights: list[list[float]], m: int, maximize: bool) -> tuple[tuple[int, ...], float]:
    best_perm = None
    best = None
    for perm in permutations(range(m)):
        if perm[0] > perm[-1]:  # reversal-equivalent order already seen
            continue
        score = _path_score(weights, perm)
        if best is None or (score > best if maximize else score < best):
            best, best_perm = score, perm
    return best_perm, best


def _nearest_neighbor(weights: list[list[float]], m: int, start: int, maximize: bool) -> list[int]:
    path = [start]
    remaining = set(range(m)) - {start}
    while remaining:
        cur = path[-1]
        # smallest index wins ties for determinism
        nxt = (max if maximize else min)(
            sorted(remaining), key=lambda t: (weights[cur][t], -t) if maximize else (weights[cur][t], t)
        )
        path.append(nxt)
        remaining.remove(nxt)
    return path


def _two_opt(weights: list[list[float]], perm: list[int], maximize: bool) -> list[int]:
    m = len(perm)
    improved = True
    while improved:
        improved = False
        for a in range(m - 1):
            for b in range(a + 1, m):
                if a == 0 and b == m - 1:
                    continue  # full reversal changes nothing
                delta = 0.0
                if a > 0:
                    delta += weights[perm[a - 1]][perm[b]] - weights[perm[a - 1]][perm[a]]
                if b < m - 1:
                    delta += weights[perm[a]][perm[b + 1]] - weights[perm[b]][perm[b + 1]]
                if (delta > 1e-12) if maximize else (delta < -1e-12):
                    perm[a : b + 1] = reversed(perm[a : b + 1])
                    improved = True
    return perm


def _heuristic(weights: list[list[float]], m: int, maximize: bool) -> tuple[tuple[int, ...], float]:
    best_perm = None
    best = None
    for start in range(m):
        perm = _two_opt(weights, _nearest_neighbor(weights, m, start, maximize), maximize)
        score = _path_score(weights, perm)
        cand = _canonical(perm)
        if (
            best is None
            or (score > best if maximize else score < best)
            or (score == best and cand < best_perm)
        ):
            best, best_perm = score, cand
    return best_perm, best


def order_axes(s: SolutionSet, mode: OrderMode, search: str = "exhaustive") -> AxisOrder:
    """Pick a display order of the objective axes.

    ``max_harmony`` maximizes the summed (1 - degree) over adjacent pairs,
    ``max_conflict`` maximizes the summed degree, ``min_clutter`` minimizes
    total crossings.  Exhaustive search enumerates all m!/2 orders (m <= 9,
    reversal-equivalent orders identified); the heuristic is best-of-m
    nearest-neighbor construction polished by 2-opt.  Ties resolve to the
    lexicographically smallest permutation oriented first-element-smaller.
    """
    if search not in ("exhaustive", "heuristic"):
        raise ValueError(f"unknown search strategy {search!r}")
    m = s.m
    if mode is OrderMode.MIN_CLUTTER:
        weights = [
            [float(crossing_count(s, i, j)) if i != j else 0.0 for j in range(m)]
            for i in range(m)
        ]
        maximize = False
    else:
        degree = conflict_matrix(s).degree
        if mode is OrderMode.MAX_HARMONY:
            weights = [
                [1.0 - degree[i][j] if i != j else 0.0 for j in range(m)] for i in range(m)
            ]
        else:
            weights = [[float(degree[i][j]) for j in range(m)] for i in range(m)]
        maximize = True

    if search == "exhaustive":
        if m > EXHAUSTIVE_LIMIT:
            raise SearchSizeError(
                f"exhaustive search is limited to m <= {EXHAUSTIVE_LIMIT} "
                f"(got m={m}); use the heuristic"
            )
        perm, score = _exhaustive(weights, m, maximize)
    else:
        perm, score = _heuristic(weights, m, maximize)
    return AxisOrder(permutation=perm, mode=mode, score=float(score))


def relationship_budget(m: int) -> tuple[int, int]:
    """(relations shown by one axis order, total pairwise relations)."""
    if m < 2:
        raise ValueError("need at least 2 objectives")
    return (m - 1, m * (m - 1) // 2)
