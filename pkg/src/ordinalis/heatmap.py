"""Efficiency color maps rendered to portable pixmap (PPM) files.

The palette is a fixed diverging gradient, linearly interpolated per
RGB channel:

* efficiency -1  -> deep blue  (0, 0, 139)
* efficiency  0  -> yellow     (255, 255, 0)
* efficiency +1  -> deep red   (139, 0, 0)
* missing cell   -> gray       (128, 128, 128)

The binary P6 pixmap needs no imaging dependency and is byte-stable, so
rendered maps can be golden-tested.  A companion CSV always carries the
raw efficiency values; the image is presentation only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import InvalidInputError
from .windows import WindowResult

DEEP_BLUE = (0, 0, 139)
YELLOW = (255, 255, 0)
DEEP_RED = (139, 0, 0)
MISSING_GRAY = (128, 128, 128)

_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class HeatmapGrid:
    """Efficiency values per (series, window); NaN cells are missing."""

    rows: tuple[str, ...]
    cols: tuple[int, ...]
    cells: np.ndarray

    def __post_init__(self) -> None:
        cells = np.array(self.cells, dtype=float)
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)
        if cells.shape != (len(self.rows), len(self.cols)):
            raise InvalidInputError(
                f"cell block {cells.shape} does not match {len(self.rows)} rows "
                f"x {len(self.cols)} cols"
            )
        finite = cells[np.isfinite(cells)]
        if finite.size and (finite.min() < -1.0 - _RANGE_TOL or finite.max() > 1.0 + _RANGE_TOL):
            raise InvalidInputError("efficiency cells must lie in [-1, 1]")

    @property
    def palette(self) -> dict[str, tuple[int, int, int]]:
        """The fixed diverging gradient every renderer of this grid uses."""
        return {"low": DEEP_BLUE, "mid": YELLOW, "high": DEEP_RED, "missing": MISSING_GRAY}


def grid_from_results(results_by_series: Mapping[str, Sequence[WindowResult]]) -> HeatmapGrid:
    """Assemble a grid from per-series window runs, aligned on window id."""
    if not results_by_series:
        raise InvalidInputError("no series to grid")
    all_ids = sorted({r.window_id for results in results_by_series.values() for r in results})
    col_of = {wid: j for j, wid in enumerate(all_ids)}
    cells = np.full((len(results_by_series), len(all_ids)), np.nan)
    for i, (_, results) in enumerate(results_by_series.items()):
        for r in results:
            cells[i, col_of[r.window_id]] = r.point.efficiency
    return HeatmapGrid(
        rows=tuple(results_by_series), cols=tuple(all_ids), cells=cells
    )


def efficiency_color(value: float) -> tuple[int, int, int]:
    """Palette color of one efficiency value; NaN maps to gray."""
    if math.isnan(value):
        return MISSING_GRAY
    if not -1.0 - _RANGE_TOL <= value <= 1.0 + _RANGE_TOL:
        raise InvalidInputError(f"efficiency must lie in [-1, 1], got {value!r}")
    value = min(1.0, max(-1.0, value))
    if value < 0.0:
        lo, hi, t = DEEP_BLUE, YELLOW, value + 1.0
    else:
        lo, hi, t = YELLOW, DEEP_RED, value
    return tuple(int(math.floor(a + (b - a) * t + 0.5)) for a, b in zip(lo, hi))


def render_heatmap(grid: HeatmapGrid, image_path, cell_px: int = 12, csv_path=None):
    """Write the grid as a P6 pixmap plus a companion CSV of raw values.

    Each cell becomes a ``cell_px`` x ``cell_px`` pixel block, so the
    image is (cols * cell_px) wide and (rows * cell_px) tall.  The CSV
    (defaulting to the image path with a .csv suffix) has one row per
    series and one column per window id; missing cells stay empty.

    Returns the (image, csv) paths.
    """
    if grid.cells.size == 0:
        raise InvalidInputError("cannot render an empty grid")
    if cell_px < 1:
        raise InvalidInputError(f"cell_px must be >= 1, got {cell_px!r}")
    image_path = Path(image_path)
    csv_path = Path(csv_path) if csv_path is not None else image_path.with_suffix(".csv")

    n_rows, n_cols = grid.cells.shape
    rgb = np.empty((n_rows, n_cols, 3), dtype=np.uint8)
    for i in range(n_rows):
        for j in range(n_cols):
            rgb[i, j] = efficiency_color(float(grid.cells[i, j]))
    pixels = np.repeat(np.repeat(rgb, cell_px, axis=0), cell_px, axis=1)
    header = f"P6\n{n_cols * cell_px} {n_rows * cell_px}\n255\n".encode("ascii")
    image_path.write_bytes(header + pixels.tobytes())

    lines = ["series," + ",".join(str(c) for c in grid.cols)]
    for name, row in zip(grid.rows, grid.cells):
        fields = ["" if math.isnan(v) else f"{v:.6f}" for v in row]
        lines.append(name + "," + ",".join(fields))
    csv_path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    return image_path, csv_path
