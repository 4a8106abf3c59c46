"""Command-line renderer: sweep CSVs in, one chart out."""

import argparse
import sys

from .render import PlotSpec, SweepFormatError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render key-rate sweep CSVs as a line chart "
                    "(PNG or SVG, chosen by the output extension).")
    parser.add_argument("--csv", action="append", required=True,
                        help="input sweep CSV; repeat to overlay several files")
    parser.add_argument("--out", required=True,
                        help="output image path (.png or .svg)")
    parser.add_argument("--series", choices=("alpha_sq", "scenario"),
                        default="alpha_sq",
                        help="what distinguishes the plotted series")
    parser.add_argument("--title", default="")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    spec = PlotSpec(input_csvs=tuple(args.csv), output_image=args.out,
                    title=args.title, series_key=args.series)
    try:
        path = render(spec)
    except (SweepFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
