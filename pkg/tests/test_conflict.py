import math
from itertools import permutations

import numpy as np
import pytest

from pareto_lens import (
    AxisOrder,
    OrderMode,
    SolutionSet,
    clutter,
    conflict_matrix,
    crossing_count,
    harmonious_pairs,
    order_axes,
    relationship_budget,
)
from pareto_lens.conflict import _crossings_bruteforce, _crossings_mergesort
from pareto_lens.errors import InsufficientDataError, PermutationError, SearchSizeError


def crossing_oracle(x, y):
    """Definition-level pair census: (discordant, concordant, tied)."""
    cross = conc = ties = 0
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            dx = x[i] - x[j]
            dy = y[i] - y[j]
            if dx == 0 or dy == 0:
                ties += 1
            elif (dx > 0) != (dy > 0):
                cross += 1
            else:
                conc += 1
    return cross, conc, ties


def _random_columns(rng):
    n = int(rng.integers(2, 120))
    if rng.uniform() < 0.5:
        x = rng.integers(0, 4, size=n).astype(float)  # heavy ties
        y = rng.integers(0, 4, size=n).astype(float)
    else:
        x = rng.uniform(size=n)
        y = rng.uniform(size=n)
    if n >= 4:  # inject exact duplicates
        x[1], y[1] = x[0], y[0]
    return x, y


class TestCrossingCount:
    def test_both_paths_match_the_oracle(self, rng):
        for _ in range(60):
            x, y = _random_columns(rng)
            expected, _, _ = crossing_oracle(x, y)
            assert _crossings_bruteforce(x, y) == expected
            assert _crossings_mergesort(x, y) == expected

    def test_census_adds_up(self, rng):
        for _ in range(30):
            x, y = _random_columns(rng)
            cross, conc, ties = crossing_oracle(x, y)
            n = len(x)
            assert cross + conc + ties == n * (n - 1) // 2
            assert _crossings_mergesort(x, y) == cross

    def test_fig1_first_gap(self, fig1):
        # pairs (a,c) and (b,c) are discordant on (f1, f2), (a,b) concordant
        assert crossing_count(fig1, 0, 1) == 2

    def test_identical_objectives_are_harmonious(self, rng):
        x = rng.uniform(size=30)
        s = SolutionSet(np.column_stack([x, x]))
        assert crossing_count(s, 0, 1) == 0

    def test_reversed_objectives_fully_conflict(self):
        x = np.arange(10, dtype=float)
        s = SolutionSet(np.column_stack([x, -x]))
        assert crossing_count(s, 0, 1) == 10 * 9 // 2

    def test_symmetric_in_the_axes(self, rng):
        s = SolutionSet(rng.uniform(size=(40, 3)))
        assert crossing_count(s, 0, 2) == crossing_count(s, 2, 0)

    def test_invariant_under_monotone_transforms(self, rng):
        values = rng.uniform(0.1, 2.0, size=(50, 2))
        s = SolutionSet(values)
        warped = SolutionSet(np.column_stack([np.exp(values[:, 0]), values[:, 1] ** 3]))
        assert crossing_count(s, 0, 1) == crossing_count(warped, 0, 1)

    def test_needs_two_solutions(self):
        with pytest.raises(InsufficientDataError):
            crossing_count(SolutionSet([[1.0, 2.0]]), 0, 1)

    def test_large_set_uses_mergesort_path(self, rng):
        x = rng.integers(0, 9, size=(500, 2)).astype(float)
        s = SolutionSet(x)
        assert crossing_count(s, 0, 1) == crossing_oracle(x[:, 0], x[:, 1])[0]


class TestConflictMatrix:
    def test_all_identical_orderings_give_zero_matrix(self, rng):
        x = rng.uniform(size=20)
        s = SolutionSet(np.column_stack([x, 2 * x, x + 5]))
        assert not conflict_matrix(s).degree.any()

    def test_reversed_pair_scores_one(self):
        x = np.arange(5, dtype=float)
        s = SolutionSet(np.column_stack([x, -x]))
        assert conflict_matrix(s).degree[0, 1] == 1.0

    def test_fig1_value(self, fig1):
        assert conflict_matrix(fig1).degree[0, 1] == pytest.approx(2 / 3)

    def test_symmetry_and_zero_diagonal(self, rng):
        s = SolutionSet(rng.uniform(size=(15, 4)))
        d = conflict_matrix(s).degree
        assert np.array_equal(d, d.T)
        assert not np.diagonal(d).any()


class TestHarmoniousPairs:
    def test_zero_matrix_lists_all_pairs(self, rng):
        x = rng.uniform(size=10)
        s = SolutionSet(np.column_stack([x, x, x]))
        assert harmonious_pairs(conflict_matrix(s)) == [(0, 1), (0, 2), (1, 2)]

    def test_single_harmonious_pair(self):
        x = np.arange(4, dtype=float)
        s = SolutionSet(np.column_stack([x, x, -x]))
        assert harmonious_pairs(conflict_matrix(s), epsilon=0.0) == [(0, 1)]

    def test_epsilon_admits_near_harmonious(self, rng):
        x = np.arange(15, dtype=float)
        y = x.copy()
        y[0], y[1] = y[1], y[0]  # exactly one discordant pair out of 105
        s = SolutionSet(np.column_stack([x, y]))
        matrix = conflict_matrix(s)
        assert harmonious_pairs(matrix, epsilon=0.0) == []
        assert harmonious_pairs(matrix, epsilon=0.05) == [(0, 1)]

    def test_sorted_by_degree_then_index(self):
        x = np.arange(6, dtype=float)
        mostly = x.copy()
        mostly[0], mostly[1] = mostly[1], mostly[0]
        s = SolutionSet(np.column_stack([x, mostly, x]))
        assert harmonious_pairs(conflict_matrix(s), epsilon=1.0)[0] == (0, 2)


class TestClutter:
    def test_harmonious_set_scores_zero(self, rng):
        x = rng.uniform(size=12)
        s = SolutionSet(np.column_stack([x, 3 * x, x + 1, 2 * x]))
        for perm in permutations(range(4)):
            assert clutter(s, perm) == 0

    def test_two_objectives_reduce_to_crossing_count(self, fig1):
        s = SolutionSet(fig1.raw_values[:, :2])
        assert clutter(s, (0, 1)) == crossing_count(s, 0, 1)
        assert clutter(s, (1, 0)) == crossing_count(s, 0, 1)

    def test_fig1_natural_order(self, fig1):
        # brute force per gap: (f1,f2)=2, (f2,f3)=2, (f3,f4)=2
        gap_counts = [crossing_oracle(fig1.values[:, i], fig1.values[:, i + 1])[0] for i in range(3)]
        assert gap_counts == [2, 2, 2]
        assert clutter(fig1, (0, 1, 2, 3)) == 6

    def test_reversal_invariant(self, rng):
        s = SolutionSet(rng.uniform(size=(25, 5)))
        order = (3, 0, 4, 1, 2)
        assert clutter(s, order) == clutter(s, order[::-1])

    def test_invalid_permutation(self, fig1):
        with pytest.raises(PermutationError):
            clutter(fig1, (0, 1, 2, 2))


def enumerate_best(degree, mode):
    """Independent full enumeration over every permutation."""
    m = len(degree)
    best = None
    for perm in permutations(range(m)):
        if mode is OrderMode.MAX_HARMONY:
            score = sum(1 - degree[a][b] for a, b in zip(perm, perm[1:]))
        else:
            score = sum(degree[a][b] for a, b in zip(perm, perm[1:]))
        if best is None or score > best:
            best = score
    return best


class TestOrderAxes:
    def test_two_objectives_identity(self, rng):
        s = SolutionSet(rng.uniform(size=(10, 2)))
        result = order_axes(s, OrderMode.MAX_HARMONY)
        assert result.permutation == (0, 1)

    def test_hand_enumerated_three_objectives(self):
        # f2 == f3 (degree 0), both fully conflict with f1
        f1 = np.array([1.0, 2.0, 3.0])
        s = SolutionSet(np.column_stack([f1, -f1, -f1]))
        result = order_axes(s, OrderMode.MAX_HARMONY, "exhaustive")
        assert result.permutation == (0, 1, 2)
        assert result.score == pytest.approx(1.0)

    def test_exhaustive_matches_full_enumeration(self, rng):
        for _ in range(20):
            m = int(rng.integers(2, 6))
            s = SolutionSet(rng.uniform(size=(12, m)))
            degree = conflict_matrix(s).degree
            for mode in (OrderMode.MAX_HARMONY, OrderMode.MAX_CONFLICT):
                got = order_axes(s, mode, "exhaustive").score
                assert got == pytest.approx(enumerate_best(degree, mode), abs=1e-12)

    def test_heuristic_never_beats_exhaustive(self, rng):
        for _ in range(15):
            m = int(rng.integers(3, 8))
            s = SolutionSet(rng.uniform(size=(15, m)))
            for mode in OrderMode:
                exact = order_axes(s, mode, "exhaustive").score
                rough = order_axes(s, mode, "heuristic").score
                if mode is OrderMode.MIN_CLUTTER:
                    assert rough >= exact - 1e-12
                else:
                    assert rough <= exact + 1e-12

    def test_min_clutter_score_is_the_clutter(self, rng):
        s = SolutionSet(rng.uniform(size=(20, 5)))
        result = order_axes(s, OrderMode.MIN_CLUTTER, "exhaustive")
        assert result.score == clutter(s, result.permutation)

    def test_orientation_canonical(self, rng):
        for search in ("exhaustive", "heuristic"):
            s = SolutionSet(rng.uniform(size=(15, 5)))
            perm = order_axes(s, OrderMode.MAX_CONFLICT, search).permutation
            assert perm[0] < perm[-1]

    def test_exhaustive_size_limit(self, rng):
        s = SolutionSet(rng.uniform(size=(5, 10)))
        with pytest.raises(SearchSizeError, match="heuristic"):
            order_axes(s, OrderMode.MAX_HARMONY, "exhaustive")

    def test_unknown_search_rejected(self, fig1):
        with pytest.raises(ValueError):
            order_axes(fig1, OrderMode.MAX_HARMONY, "thorough")

    def test_deterministic(self, rng):
        s = SolutionSet(rng.uniform(size=(30, 6)))
        first = order_axes(s, OrderMode.MAX_HARMONY, "heuristic")
        second = order_axes(s, OrderMode.MAX_HARMONY, "heuristic")
        assert first == second


class TestRelationshipBudget:
    def test_five_objectives(self):
        assert relationship_budget(5) == (4, 10)

    def test_two_objectives(self):
        assert relationship_budget(2) == (1, 1)

    def test_ten_objectives(self):
        assert relationship_budget(10) == (9, 45)

    def test_rejects_single_objective(self):
        with pytest.raises(ValueError):
            relationship_budget(1)
