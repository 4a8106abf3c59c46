"""Render key-rate sweep CSVs as line charts.

Consumes only the public sweep CSV contract (columns Q, alpha_sq, rate,
bb84_rate, minimizing_re12, feasible) and knows nothing about how the
rates were computed.  The output format follows the file extension
(.png or .svg).
"""

import csv
import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")  # file output only; never needs a display

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = ("Q", "alpha_sq", "rate", "bb84_rate", "minimizing_re12", "feasible")
SERIES_KEYS = ("alpha_sq", "scenario")
OUTPUT_SUFFIXES = (".png", ".svg")


class SweepFormatError(ValueError):
    """The input does not match the sweep CSV contract."""


@dataclass(frozen=True)
class PlotSpec:
    """One chart: input sweeps, output image, and how to split series.

    series_key "alpha_sq" draws one line per alpha^2 value found in the
    rows; "scenario" draws one line per input file, labeled by file stem,
    so several sweeps can be overlaid.
    """

    input_csvs: tuple
    output_image: str
    title: str = ""
    series_key: str = "alpha_sq"

    def __post_init__(self):
        object.__setattr__(self, "input_csvs", tuple(self.input_csvs))
        if not self.input_csvs:
            raise SweepFormatError("need at least one input CSV")
        if self.series_key not in SERIES_KEYS:
            raise SweepFormatError(
                f"series key must be one of {', '.join(SERIES_KEYS)}")


def load_sweep(path):
    """Rows of one sweep CSV as dicts; raises naming any missing column."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        columns = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in columns]
        if missing:
            raise SweepFormatError(f"{path}: missing column(s): {', '.join(missing)}")
        rows = list(reader)
    if not rows:
        raise SweepFormatError(f"{path}: no data rows")
    return rows


def _series_label(path, row, key):
    if key == "alpha_sq":
        return f"alpha^2 = {row['alpha_sq']}"
    return os.path.splitext(os.path.basename(path))[0]


def collect_series(spec):
    """Feasible rows grouped into plot series, plus the dashed reference.

    Returns (series, reference): series maps label -> [(Q, rate)] sorted
    by Q; reference is the [(Q, bb84_rate)] line, empty when the column
    was left blank.
    """
    series = {}
    reference = {}
    for path in spec.input_csvs:
        for row in load_sweep(path):
            q = float(row["Q"])
            if row["bb84_rate"]:
                reference[q] = float(row["bb84_rate"])
            if row["feasible"] != "1" or not row["rate"]:
                continue
            series.setdefault(_series_label(path, row, spec.series_key), []).append(
                (q, float(row["rate"])))
    if not series:
        raise SweepFormatError("no feasible rows to plot")
    for points in series.values():
        points.sort()
    return series, sorted(reference.items())


def build_figure(spec):
    """Matplotlib figure for a spec; the plotted data is a pure function
    of the input CSVs."""
    series, reference = collect_series(spec)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    notes = []
    for label in sorted(series):
        points = series[label]
        ax.plot([p[0] for p in points], [p[1] for p in points], label=label)
        below = [q for q, rate in points if rate < 0.0]
        if below:
            notes.append(f"{label}: rate < 0 from Q = {min(below):g}")
    if reference:
        ax.plot([q for q, _ in reference], [r for _, r in reference],
                linestyle="--", color="black", linewidth=1.0,
                label="four-state reference")
    ax.set_xlabel("Q")
    ax.set_ylabel("key rate (bits per raw-key bit)")
    ax.set_ylim(bottom=0.0)  # visual floor; negatives are annotated instead
    if spec.title:
        ax.set_title(spec.title)
    ax.legend(loc="upper right", fontsize=8)
    if notes:
        ax.text(0.02, 0.02, "\n".join(notes), transform=ax.transAxes,
                fontsize=7, va="bottom")
    fig.tight_layout()
    return fig


def render(spec):
    """Write the chart for a spec and return the output path."""
    suffix = os.path.splitext(spec.output_image)[1].lower()
    if suffix not in OUTPUT_SUFFIXES:
        raise SweepFormatError(
            f"unsupported output extension {suffix!r}; "
            f"use one of {', '.join(OUTPUT_SUFFIXES)}")
    fig = build_figure(spec)
    try:
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)
    return spec.output_image
