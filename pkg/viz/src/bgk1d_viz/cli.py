"""Command-line entry point: viz <kind> <inputs...> <output>."""

from __future__ import annotations

import argparse
import sys

from .plots import plot_conservation, plot_moments, plot_pdf_heatmap
from .readers import FormatError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="viz",
        description="Render figures from solver CSV outputs.",
    )
    sub = parser.add_subparsers(dest="kind", required=True)

    p = sub.add_parser("heatmap", help="phase-space heatmap of one snapshot")
    p.add_argument("snapshot", help="pdf_*.csv snapshot file")
    p.add_argument("output", help="image file to write (png/svg)")

    p = sub.add_parser("moments", help="rho/u/T profiles at two times")
    p.add_argument("first", help="moments_*.csv for the first time")
    p.add_argument("second", help="moments_*.csv for the second time")
    p.add_argument("output", help="image file to write (png/svg)")

    p = sub.add_parser("conservation", help="deviation curves, log scale")
    p.add_argument("corrected", help="conservation.csv from a corrected run")
    p.add_argument("uncorrected", help="conservation.csv from an uncorrected run")
    p.add_argument("output", help="image file to write (png/svg)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.kind == "heatmap":
            plot_pdf_heatmap(args.snapshot, args.output)
        elif args.kind == "moments":
            plot_moments(args.first, args.second, args.output)
        else:
            plot_conservation(args.corrected, args.uncorrected, args.output)
    except (FormatError, OSError) as err:
        print(f"viz: error: {err}", file=sys.stderr)
        return 2
    print(f"wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
