"""Ordinal-pattern time-series analysis.

Symbolizes sliding windows of a series into ordinal patterns, estimates
their probability distribution, and quantifies each window with
normalized Shannon entropy, normalized discrete Fisher information and
their difference (the efficiency index).  Includes seeded reference
generators, region classification, CSV export and heatmap rendering.
"""

from .errors import (
    DimensionMismatchError,
    InsufficientDataError,
    InvalidInputError,
    InvalidParameterError,
    InvalidPdfError,
    InvalidPermutationError,
    MissingColumnError,
    NoParseableRowsError,
    OrdinalisError,
    ShortSeriesWarning,
)
from .generators import (
    GeneratorConfig,
    fgn,
    fgn_autocovariance,
    generate,
    logistic_map,
    random_walk,
    white_noise,
)
from .heatmap import HeatmapGrid, efficiency_color, grid_from_results, render_heatmap
from .patterns import (
    EmbeddingParams,
    OrdinalPattern,
    extract_pattern,
    lehmer_index,
    pattern_sequence,
)
from .pdf import OrdinalPdf, estimate_pdf
from .quantifiers import (
    QuantifierPoint,
    efficiency_index,
    fisher_information,
    fisher_normalization,
    quantify,
    shannon_entropy,
)
from .regions import (
    EFFICIENT,
    INEFFICIENT,
    RegionTable,
    classify,
    format_region_table,
    percent_half_up,
    region_counts,
)
from .tableio import (
    SeriesTable,
    export_plane_csv,
    export_window_csv,
    load_csv,
    write_series_csv,
)
from .windows import WindowResult, WindowSpec, analyze_series, window_starts

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatchError",
    "EFFICIENT",
    "EmbeddingParams",
    "GeneratorConfig",
    "HeatmapGrid",
    "INEFFICIENT",
    "InsufficientDataError",
    "InvalidInputError",
    "InvalidParameterError",
    "InvalidPdfError",
    "InvalidPermutationError",
    "MissingColumnError",
    "NoParseableRowsError",
    "OrdinalPattern",
    "OrdinalPdf",
    "OrdinalisError",
    "QuantifierPoint",
    "RegionTable",
    "SeriesTable",
    "ShortSeriesWarning",
    "WindowResult",
    "WindowSpec",
    "analyze_series",
    "classify",
    "efficiency_color",
    "efficiency_index",
    "estimate_pdf",
    "export_plane_csv",
    "export_window_csv",
    "extract_pattern",
    "fgn",
    "fgn_autocovariance",
    "fisher_information",
    "fisher_normalization",
    "format_region_table",
    "generate",
    "grid_from_results",
    "lehmer_index",
    "load_csv",
    "logistic_map",
    "pattern_sequence",
    "percent_half_up",
    "quantify",
    "random_walk",
    "region_counts",
    "render_heatmap",
    "shannon_entropy",
    "white_noise",
    "window_starts",
    "write_series_csv",
]
