"""Exception types shared across the library.

Everything raised on bad data or bad geometry derives from
:class:`ParetoLensError`, so callers (notably the CLI) can separate domain
failures from genuine bugs.
"""


class ParetoLensError(Exception):
    """Base class for all domain errors raised by pareto-lens."""


class CsvFormatError(ParetoLensError):
    """Structurally broken CSV input (ragged rows, empty file, ...)."""


class CsvParseError(ParetoLensError):
    """A CSV cell that does not parse as a finite real number."""

    def __init__(self, row: int, column: int, cell: str):
        self.row = row
        self.column = column
        self.cell = cell
        super().__init__(f"row {row}, column {column}: {cell!r} is not a finite number")


class DimensionError(ParetoLensError):
    """Objective counts that do not line up (or fewer than two objectives)."""


class EmptySetError(ParetoLensError):
    """A solution set with no solutions, which no analysis accepts."""


class DegenerateAxisError(ParetoLensError):
    """An objective that is constant where a nonzero range is required."""

    def __init__(self, objective_name: str, detail: str = ""):
        self.objective_name = objective_name
        msg = f"objective {objective_name!r} is constant (degenerate axis)"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InsufficientDataError(ParetoLensError):
    """Too few solutions for the requested computation."""


class ParallelLinesError(ParetoLensError):
    """Slope k=1: polyline segments are parallel, no finite dual point."""


class VerticalLineError(ParetoLensError):
    """Dual point with u=0 maps back to a vertical line (k infinite)."""


class DegenerateSegmentsError(ParetoLensError):
    """Two identical plot segments: infinitely many intersection points."""


class DegenerateRegressionError(ParetoLensError):
    """Linear fit requested on a constant objective."""


class PermutationError(ParetoLensError):
    """An axis order that is not a bijection over the objective indices."""


class SearchSizeError(ParetoLensError):
    """Exhaustive axis-order search requested beyond its size limit."""
