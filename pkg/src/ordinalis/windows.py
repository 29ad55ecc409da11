"""Sliding-window application of the quantifier pipeline.

Windows are defined purely on sample index: length N, advanced by a
fixed step, kept while they fit inside the series.  Timestamps from the
input are carried along as opaque labels; there is no calendar logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InsufficientDataError, InvalidInputError, InvalidParameterError, OrdinalisError
from .patterns import EmbeddingParams, _pattern_codes
from .pdf import _pdf_from_codes, _warn_if_short
from .quantifiers import QuantifierPoint, quantify


@dataclass(frozen=True)
class WindowSpec:
    """Window geometry: samples per window and samples between starts."""

    window_len: int
    step: int

    def __post_init__(self) -> None:
        for name in ("window_len", "step"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)):
                raise InvalidParameterError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.window_len < 2:
            raise InvalidParameterError(f"window_len must be >= 2, got {self.window_len!r}")
        if self.step < 1:
            raise InvalidParameterError(f"step must be >= 1, got {self.step!r}")

    def validate_for(self, params: EmbeddingParams) -> None:
        """Require at least two patterns per window for the given embedding."""
        if self.window_len < params.span + 1:
            raise InvalidParameterError(
                f"window_len {self.window_len} too small for dimension "
                f"{params.dimension} and delay {params.delay} (need >= {params.span + 1})"
            )


@dataclass(frozen=True)
class WindowResult:
    """Quantifiers of one window; indices are [start_idx, end_idx)."""

    window_id: int
    start_idx: int
    end_idx: int
    point: QuantifierPoint
    start_label: str | None = None
    end_label: str | None = None


def window_starts(n_samples: int, spec: WindowSpec) -> list[int]:
    """Start offsets 0, step, 2*step, ... while a full window still fits.

    The count obeys the closed formula floor((M - N) / step) + 1.
    """
    if n_samples < spec.window_len:
        raise InsufficientDataError(
            f"series has {n_samples} samples, window needs {spec.window_len}"
        )
    return list(range(0, n_samples - spec.window_len + 1, spec.step))


def analyze_series(
    series,
    params: EmbeddingParams,
    spec: WindowSpec,
    labels: Sequence[str] | None = None,
) -> list[WindowResult]:
    """Estimate the pattern PDF and quantifiers on every sliding window.

    Each window's distribution is computed from exactly its own
    ``window_len`` samples, so results are unaffected by data outside
    the window.  Errors from the PDF or quantifier stage are re-raised
    tagged with the offending window.
    """
    arr = np.asarray(series, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError("series must be one-dimensional")
    spec.validate_for(params)
    if labels is not None and len(labels) != arr.size:
        raise InvalidInputError(
            f"got {len(labels)} labels for {arr.size} samples"
        )
    starts = window_starts(arr.size, spec)
    _warn_if_short(spec.window_len, params)
    codes = _pattern_codes(arr, params)
    patterns_per_window = spec.window_len - params.span + 1

    results: list[WindowResult] = []
    for window_id, start in enumerate(starts):
        end = start + spec.window_len
        try:
            pdf = _pdf_from_codes(codes[start:start + patterns_per_window], params.n_states)
            point = quantify(pdf)
        except OrdinalisError as exc:
            raise type(exc)(f"window {window_id} [{start}:{end}): {exc}") from exc
        results.append(
            WindowResult(
                window_id=window_id,
                start_idx=start,
                end_idx=end,
                point=point,
                start_label=None if labels is None else str(labels[start]),
                end_label=None if labels is None else str(labels[end - 1]),
            )
        )
    return results
