"""Command-line interface for the sliding-window efficiency pipeline.

Subcommands
-----------
analyze   load a series file, run sliding windows, write per-window CSV
regions   print the efficient/inefficient point-count table per column
heatmap   render the per-column efficiency color map (PPM + CSV)
plane     export per-window (H, F) scatter data for plane plots
synth     generate a seeded reference signal and write it as CSV

Exit codes: 0 success, 1 usage error, 2 data error.  The environment
variable ``ORDINALIS_THREADS`` caps how many columns are analyzed in
parallel; everything else is configured through flags.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .errors import InvalidParameterError, OrdinalisError
from .generators import GeneratorConfig, generate
from .heatmap import grid_from_results, render_heatmap
from .patterns import EmbeddingParams
from .regions import DEFAULT_F_MAX, DEFAULT_H_MIN, format_region_table, region_counts
from .tableio import export_plane_csv, export_window_csv, load_csv, write_series_csv
from .windows import WindowSpec, analyze_series

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

THREADS_ENV = "ORDINALIS_THREADS"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; remap to 1 so that 2
    # stays reserved for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ordinalis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pipeline = argparse.ArgumentParser(add_help=False)
    pipeline.add_argument("--dimension", type=int, default=4, help="embedding dimension (default 4)")
    pipeline.add_argument("--tau", type=int, default=1, help="embedding delay in samples (default 1)")
    pipeline.add_argument("--window", type=int, default=300, help="samples per window (default 300)")
    pipeline.add_argument("--step", type=int, default=20, help="samples between window starts (default 20)")
    pipeline.add_argument("--h-min", type=float, default=DEFAULT_H_MIN,
                          help="entropy threshold of the efficient region (default 0.75)")
    pipeline.add_argument("--f-max", type=float, default=DEFAULT_F_MAX,
                          help="Fisher threshold of the efficient region (default 0.3)")

    reading = argparse.ArgumentParser(add_help=False)
    reading.add_argument("--input", required=True, help="delimited series file with a header row")
    reading.add_argument("--delimiter", default=",", help="field separator (default comma)")
    reading.add_argument("--label-column", default=None,
                         help="timestamp/ordinal column (default: first column)")
    reading.add_argument("--columns", default=None,
                         help="comma-separated value columns (default: all non-label columns)")

    p = sub.add_parser("analyze", parents=[pipeline, reading],
                       help="per-window quantifier CSV for each selected column")
    p.add_argument("--out", required=True, help="output CSV (suffixed per column when several)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("regions", parents=[pipeline, reading],
                       help="efficient/inefficient point counts per column")
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("heatmap", parents=[pipeline, reading],
                       help="efficiency color map over all selected columns")
    p.add_argument("--out", required=True, help="output PPM image (companion CSV alongside)")
    p.add_argument("--cell-px", type=int, default=12, help="pixels per grid cell (default 12)")
    p.set_defaults(func=_cmd_heatmap)

    p = sub.add_parser("plane", parents=[pipeline, reading],
                       help="per-window (H, F) scatter CSV for each selected column")
    p.add_argument("--out", required=True, help="output CSV (suffixed per column when several)")
    p.set_defaults(func=_cmd_plane)

    p = sub.add_parser("synth", help="generate a seeded reference signal as CSV")
    p.add_argument("--kind", required=True,
                   choices=["white_noise", "random_walk", "fgn", "logistic_map"])
    p.add_argument("--length", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--hurst", type=float, default=None, help="Hurst exponent (fgn only)")
    p.add_argument("--r", type=float, default=4.0, help="logistic parameter (logistic_map only)")
    p.add_argument("--x0", type=float, default=0.3, help="initial state (logistic_map only)")
    p.add_argument("--out", required=True, help="output CSV")
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"ordinalis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OrdinalisError, OSError) as exc:
        print(f"ordinalis: error: {exc}", file=sys.stderr)
        return EXIT_DATA


def _max_threads() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return max(1, value)


def _analyze_columns(args):
    """Load the input table and run every selected column; order-preserving."""
    wanted = None
    if args.columns is not None:
        wanted = [name.strip() for name in args.columns.split(",") if name.strip()]
    table = load_csv(args.input, label_column=args.label_column,
                     value_columns=wanted, delimiter=args.delimiter)
    params = EmbeddingParams(dimension=args.dimension, delay=args.tau)
    spec = WindowSpec(window_len=args.window, step=args.step)

    names = list(table.columns)
    cap = _max_threads()
    workers = min(len(names), cap if cap is not None else (os.cpu_count() or 1))
    if workers <= 1:
        runs = [analyze_series(table.columns[n], params, spec, labels=table.labels)
                for n in names]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(
                lambda n: analyze_series(table.columns[n], params, spec, labels=table.labels),
                names,
            ))
    return {name: results for name, results in zip(names, runs)}


def _per_column_path(base: Path, column: str, single: bool) -> Path:
    if single:
        return base
    return base.with_name(f"{base.stem}_{column}{base.suffix}")


def _cmd_analyze(args) -> int:
    results_by_column = _analyze_columns(args)
    base = Path(args.out)
    single = len(results_by_column) == 1
    for name, results in results_by_column.items():
        out = export_window_csv(results, _per_column_path(base, name, single))
        print(f"wrote {out} ({len(results)} windows)")
    return EXIT_OK


def _cmd_plane(args) -> int:
    results_by_column = _analyze_columns(args)
    base = Path(args.out)
    single = len(results_by_column) == 1
    for name, results in results_by_column.items():
        out = export_plane_csv(results, _per_column_path(base, name, single))
        print(f"wrote {out} ({len(results)} windows)")
    return EXIT_OK


def _cmd_regions(args) -> int:
    results_by_column = _analyze_columns(args)
    tables = [
        region_counts(results, name, h_min=args.h_min, f_max=args.f_max)
        for name, results in results_by_column.items()
    ]
    print(format_region_table(tables))
    return EXIT_OK


def _cmd_heatmap(args) -> int:
    results_by_column = _analyze_columns(args)
    grid = grid_from_results(results_by_column)
    image_path, csv_path = render_heatmap(grid, args.out, cell_px=args.cell_px)
    print(f"wrote {image_path} and {csv_path}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    config = GeneratorConfig(
        kind=args.kind,
        length=args.length,
        seed=args.seed,
        hurst=args.hurst,
        r=args.r,
        x0=args.x0,
    )
    series = generate(config)
    labels = [str(i) for i in range(len(series))]
    out = write_series_csv(Path(args.out), labels, {args.kind: series})
    print(f"wrote {out} ({len(series)} samples)")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
