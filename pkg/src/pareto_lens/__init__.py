"""pareto-lens: read many-objective solution sets through parallel coordinates.

Load or generate solution sets, compute quality measures (convergence,
coverage, uniformity, extensity), quantify objective conflict and linear
dependence via the plot's point-line duality, pick good axis orders, and
render deterministic SVG parallel-coordinates plots.
"""

__version__ = "0.1.0"

from .conflict import (
    AxisOrder,
    ConflictMatrix,
    OrderMode,
    clutter,
    conflict_matrix,
    crossing_count,
    harmonious_pairs,
    order_axes,
    relationship_budget,
)
from .core import (
    NormalizationMode,
    SolutionSet,
    csv_text,
    load_csv,
    normalize,
    parse_csv,
    write_csv,
)
from .dominance import (
    DominanceRelation,
    SetDominance,
    compare,
    nondominated_filter,
    set_dominance,
)
from .duality import (
    DependenceVerdict,
    DualityReport,
    DualPoint,
    LineParams,
    SegmentCrossing,
    SlopeClass,
    classify_slope,
    detect_linear_dependence,
    line_from_rho,
    rho_from_line,
    segment_intersection,
)
from .errors import ParetoLensError
from .metrics import (
    AxisReach,
    CoverageReport,
    MetricReport,
    axis_reach,
    gd_plus,
    grid_coverage,
    maximum_spread,
    spacing,
    spacing_pairwise,
    summarize,
)
from .problems import (
    GeneratedSet,
    MldmpInstance,
    generate_mldmp,
    generate_simplex_front,
    generate_sphere_front,
    mldmp_objectives,
)
from .render import (
    GroupStyle,
    PlotSpec,
    SvgDocument,
    render,
    render_comparison,
    segment_signature,
)

__all__ = [
    "__version__",
    "AxisOrder",
    "AxisReach",
    "ConflictMatrix",
    "CoverageReport",
    "DependenceVerdict",
    "DominanceRelation",
    "DualityReport",
    "DualPoint",
    "GeneratedSet",
    "GroupStyle",
    "LineParams",
    "MetricReport",
    "MldmpInstance",
    "NormalizationMode",
    "OrderMode",
    "ParetoLensError",
    "PlotSpec",
    "SegmentCrossing",
    "SetDominance",
    "SlopeClass",
    "SolutionSet",
    "SvgDocument",
    "axis_reach",
    "classify_slope",
    "clutter",
    "compare",
    "conflict_matrix",
    "crossing_count",
    "csv_text",
    "detect_linear_dependence",
    "gd_plus",
    "generate_mldmp",
    "generate_simplex_front",
    "generate_sphere_front",
    "grid_coverage",
    "harmonious_pairs",
    "line_from_rho",
    "load_csv",
    "maximum_spread",
    "mldmp_objectives",
    "nondominated_filter",
    "normalize",
    "order_axes",
    "parse_csv",
    "relationship_budget",
    "render",
    "render_comparison",
    "rho_from_line",
    "segment_intersection",
    "segment_signature",
    "set_dominance",
    "spacing",
    "spacing_pairwise",
    "summarize",
    "write_csv",
]
