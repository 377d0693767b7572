"""Solution sets, CSV ingestion and per-axis normalization.

A :class:`SolutionSet` is an ordered, immutable collection of objective
vectors.  Minimization is the canonical internal sense: columns flagged as
maximize are negated on construction, so dominance and quality metrics can
assume "smaller is better" throughout.  Reporting surfaces (CSV write-back,
plots, range reports) use the un-negated values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CsvFormatError,
    CsvParseError,
    DegenerateAxisError,
    DimensionError,
    EmptySetError,
)

__all__ = [
    "SolutionSet",
    "NormalizationMode",
    "load_csv",
    "parse_csv",
    "write_csv",
    "csv_text",
    "normalize",
]


def _default_names(m: int) -> list[str]:
    return [f"f{i + 1}" for i in range(m)]


class SolutionSet:
    """Ordered collection of objective vectors plus objective metadata.

    Parameters
    ----------
    rows:
        Solution values in problem units, one row per solution.
    objective_names:
        One name per objective; defaults to ``f1..fm``.
    maximize:
        Per-objective flags (or an index collection) marking objectives to
        maximize.  Those columns are negated internally; ``raw_values``
        restores problem units.

    Solution order is preserved from the input and the set is immutable
    after construction, so concurrent readers are safe.
    """

    __slots__ = ("_values", "_names", "_maximize")

    def __init__(
        self,
        rows: Iterable[Sequence[float]] | np.ndarray,
        objective_names: Optional[Sequence[str]] = None,
        maximize: Optional[Iterable[int] | Sequence[bool] | np.ndarray] = None,
    ):
        values = np.array(rows, dtype=float)
        if values.ndim == 1:
            values = values.reshape(1, -1) if values.size else values.reshape(0, 0)
        if values.ndim != 2:
            raise DimensionError("solution rows must form a 2-D table")
        n, m = values.shape
        if n == 0:
            raise EmptySetError("a solution set must contain at least one solution")
        if m < 2:
            raise DimensionError(f"at least 2 objectives required, got {m}")
        if not np.isfinite(values).all():
            bad = np.argwhere(~np.isfinite(values))[0]
            raise CsvParseError(int(bad[0]) + 1, int(bad[1]) + 1, str(values[tuple(bad)]))

        if objective_names is None:
            names = _default_names(m)
        else:
            names = [str(s) for s in objective_names]
            if len(names) != m:
                raise DimensionError(
                    f"{len(names)} objective names for {m} objectives"
                )

        flags = np.zeros(m, dtype=bool)
        if maximize is not None:
            maximize = list(maximize)
            if len(maximize) == m and all(isinstance(x, (bool, np.bool_)) for x in maximize):
                flags = np.array(maximize, dtype=bool)
            else:
                for idx in maximize:
                    i = int(idx)
                    if not 0 <= i < m:
                        raise DimensionError(f"maximize index {i} out of range for m={m}")
                    flags[i] = True

        canonical = values.copy()
        canonical[:, flags] = -canonical[:, flags]
        canonical.setflags(write=False)
        flags.setflags(write=False)
        self._values = canonical
        self._names = tuple(names)
        self._maximize = flags

    # -- basic shape -----------------------------------------------------

    @property
    def n(self) -> int:
        """Number of solutions."""
        return self._values.shape[0]

    @property
    def m(self) -> int:
        """Number of objectives."""
        return self._values.shape[1]

    @property
    def values(self) -> np.ndarray:
        """Canonical (minimization-sense) value matrix, shape (n, m)."""
        return self._values

    @property
    def raw_values(self) -> np.ndarray:
        """Values in problem units (maximize columns un-negated)."""
        raw = self._values.copy()
        raw[:, self._maximize] = -raw[:, self._maximize]
        raw.setflags(write=False)
        return raw

    @property
    def objective_names(self) -> tuple[str, ...]:
        return self._names

    @property
    def maximize(self) -> np.ndarray:
        """Per-objective maximize flags (boolean, read-only)."""
        return self._maximize

    # -- derived sets ----------------------------------------------------

    def take(self, indices: Sequence[int]) -> "SolutionSet":
        """Sub-set with the given solution indices, order as given."""
        raw = self.raw_values[list(indices), :]
        return SolutionSet(raw, self._names, self._maximize)

    def permute_objectives(self, order: Sequence[int]) -> "SolutionSet":
        """Column-permuted copy; names and senses follow their objectives."""
        order = list(order)
        if sorted(order) != list(range(self.m)):
            raise DimensionError(f"invalid objective permutation {order}")
        raw = self.raw_values[:, order]
        names = [self._names[i] for i in order]
        flags = self._maximize[order]
        return SolutionSet(raw, names, flags)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"SolutionSet(n={self.n}, m={self.m}, names={list(self._names)})"


# -- normalization -------------------------------------------------------


@dataclass(frozen=True)
class NormalizationMode:
    """How values map onto a common [0, 1]-ish vertical scale.

    ``none`` leaves values untouched, ``per_axis_minmax`` maps each
    objective affinely onto [0, 1], ``explicit`` uses caller-supplied
    per-objective (lo, hi) bounds (values may land outside [0, 1]).
    """

    kind: str
    bounds: Optional[tuple[tuple[float, float], ...]] = None

    @staticmethod
    def none() -> "NormalizationMode":
        return NormalizationMode("none")

    @staticmethod
    def per_axis_minmax() -> "NormalizationMode":
        return NormalizationMode("per_axis_minmax")

    @staticmethod
    def explicit(bounds: Sequence[Sequence[float]]) -> "NormalizationMode":
        fixed = tuple((float(lo), float(hi)) for lo, hi in bounds)
        for i, (lo, hi) in enumerate(fixed):
            if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
                raise DimensionError(f"explicit bounds for objective {i + 1} need lo < hi")
        return NormalizationMode("explicit", fixed)


def normalize(s: SolutionSet, mode: NormalizationMode) -> SolutionSet:
    """Return a normalized copy of ``s`` (problem-unit values are mapped).

    All objectives of the result carry minimization sense: the affine map
    is a display-space transform, and idempotence under per_axis_minmax
    only holds when no further negation is applied.

    Raises :class:`DegenerateAxisError` under ``per_axis_minmax`` when an
    objective is constant; pass explicit bounds to handle that case.
    """
    if mode.kind == "none":
        return s
    raw = s.raw_values
    if mode.kind == "per_axis_minmax":
        lo = raw.min(axis=0)
        hi = raw.max(axis=0)
        for j in range(s.m):
            if lo[j] == hi[j]:
                raise DegenerateAxisError(s.objective_names[j])
    elif mode.kind == "explicit":
        if mode.bounds is None or len(mode.bounds) != s.m:
            raise DimensionError(
                f"explicit normalization needs {s.m} bounds, got "
                f"{0 if mode.bounds is None else len(mode.bounds)}"
            )
        lo = np.array([b[0] for b in mode.bounds])
        hi = np.array([b[1] for b in mode.bounds])
    else:
        raise ValueError(f"unknown normalization mode {mode.kind!r}")
    scaled = (raw - lo) / (hi - lo)
    return SolutionSet(scaled, s.objective_names)


# -- CSV ingestion and write-back -----------------------------------------


def _looks_numeric(cell: str) -> bool:
    try:
        return math.isfinite(float(cell))
    except ValueError:
        return False


def parse_csv(
    text: str,
    has_header: Optional[bool] = None,
    maximize_indices: Optional[Iterable[int]] = None,
) -> SolutionSet:
    """Parse comma-separated objective rows into a :class:`SolutionSet`.

    ``has_header=None`` auto-detects: a first row with any non-numeric cell
    is treated as the header.  Maximize-flagged columns are negated
    internally (see :class:`SolutionSet`).
    """
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if not lines:
        raise EmptySetError("no data rows in CSV input")

    rows = [[cell.strip() for cell in ln.split(",")] for ln in lines]
    header: Optional[list[str]] = None
    if has_header is None:
        # headers are fully non-numeric rows; a mixed row is (bad) data
        has_header = not any(_looks_numeric(c) for c in rows[0])
    if has_header:
        header = rows[0]
        rows = rows[1:]
        if not rows:
            raise EmptySetError("CSV contains a header but no data rows")

    width = len(rows[0])
    if width < 2:
        raise DimensionError(f"need at least 2 objective columns, got {width}")
    data = np.empty((len(rows), width), dtype=float)
    for r, row in enumerate(rows):
        if len(row) != width:
            raise CsvFormatError(
                f"row {r + 1} has {len(row)} columns, expected {width}"
            )
        for c, cell in enumerate(row):
            try:
                v = float(cell)
            except ValueError:
                raise CsvParseError(r + 1, c + 1, cell) from None
            if not math.isfinite(v):
                raise CsvParseError(r + 1, c + 1, cell)
            data[r, c] = v

    return SolutionSet(data, header, maximize_indices)


def load_csv(
    path: str | Path,
    has_header: Optional[bool] = None,
    maximize_indices: Optional[Iterable[int]] = None,
) -> SolutionSet:
    """Read a solution set from a CSV file (UTF-8, comma-separated)."""
    return parse_csv(
        Path(path).read_text(encoding="utf-8"),
        has_header=has_header,
        maximize_indices=maximize_indices,
    )


def csv_text(s: SolutionSet) -> str:
    """Serialize problem-unit values; header always emitted, 17 significant
    digits so floats round-trip exactly."""
    out = [",".join(s.objective_names)]
    for row in s.raw_values:
        out.append(",".join(f"{v:.17g}" for v in row))
    return "\n".join(out) + "\n"


def write_csv(s: SolutionSet, path: str | Path) -> None:
    """Write :func:`csv_text` output to ``path``."""
    Path(path).write_text(csv_text(s), encoding="utf-8")
