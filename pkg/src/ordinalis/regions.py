"""Efficiency-region classification and point-count tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InsufficientDataError
from .quantifiers import QuantifierPoint
from .windows import WindowResult

EFFICIENT = "efficient"
INEFFICIENT = "inefficient"

#: Default region bounds: entropy above 0.75 and Fisher information below 0.3.
DEFAULT_H_MIN = 0.75
DEFAULT_F_MAX = 0.3


@dataclass(frozen=True)
class RegionTable:
    """Efficient/inefficient window counts for one series."""

    series_label: str
    n_efficient: int
    n_inefficient: int
    pct_efficient: int

    @property
    def total(self) -> int:
        return self.n_efficient + self.n_inefficient


def classify(
    point: QuantifierPoint,
    h_min: float = DEFAULT_H_MIN,
    f_max: float = DEFAULT_F_MAX,
) -> str:
    """``efficient`` iff entropy > h_min and fisher < f_max, both strict."""
    if point.entropy > h_min and point.fisher < f_max:
        return EFFICIENT
    return INEFFICIENT


def region_counts(
    results: Sequence[WindowResult],
    series_label: str,
    h_min: float = DEFAULT_H_MIN,
    f_max: float = DEFAULT_F_MAX,
) -> RegionTable:
    """Count both regions over a window run; percentage is rounded half-up."""
    if not results:
        raise InsufficientDataError("no window results to classify")
    n_efficient = sum(
        1 for r in results if classify(r.point, h_min=h_min, f_max=f_max) == EFFICIENT
    )
    total = len(results)
    return RegionTable(
        series_label=series_label,
        n_efficient=n_efficient,
        n_inefficient=total - n_efficient,
        pct_efficient=percent_half_up(n_efficient, total),
    )


def percent_half_up(part: int, total: int) -> int:
    """Integer percentage of part/total, exact half-up rounding."""
    if total <= 0:
        raise InsufficientDataError("total must be positive")
    return (200 * part + total) // (2 * total)


_COL = 17  # width of each numeric column in the aligned table


def format_region_table(tables: Iterable[RegionTable]) -> str:
    """Aligned text table of region counts, one row per series."""
    lines = [
        f"{'Points within':>{_COL}}  {'Points outside':>{_COL}}  {'Percentage of':>{_COL}}  Series",
        f"{'efficiency bounds':>{_COL}}  {'efficiency bounds':>{_COL}}  {'efficient windows':>{_COL}}",
    ]
    for t in tables:
        pct = f"{t.pct_efficient}%"
        lines.append(
            f"{t.n_efficient:>{_COL}d}  {t.n_inefficient:>{_COL}d}  {pct:>{_COL}}  {t.series_label}"
        )
    return "\n".join(lines)
