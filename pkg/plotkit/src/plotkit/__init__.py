"""Chart renderer for key-rate sweep CSVs."""

from .render import (
    OUTPUT_SUFFIXES,
    REQUIRED_COLUMNS,
    SERIES_KEYS,
    PlotSpec,
    SweepFormatError,
    build_figure,
    collect_series,
    load_sweep,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "OUTPUT_SUFFIXES",
    "PlotSpec",
    "REQUIRED_COLUMNS",
    "SERIES_KEYS",
    "SweepFormatError",
    "build_figure",
    "collect_series",
    "load_sweep",
    "render",
]
