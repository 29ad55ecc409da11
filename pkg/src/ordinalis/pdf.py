"""Ordinal-pattern probability distributions estimated by relative frequency."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    InsufficientDataError,
    InvalidInputError,
    InvalidPdfError,
    ShortSeriesWarning,
)
from .patterns import EmbeddingParams, _pattern_codes

#: |sum(probs) - 1| must stay below this for count-derived distributions.
SUM_TOL = 1e-12

#: Series shorter than n_states times this factor trigger ShortSeriesWarning.
SHORT_SERIES_FACTOR = 10


@dataclass(frozen=True)
class OrdinalPdf:
    """Probability vector over the D! patterns, in lexicographic state order.

    ``n_windows`` is the number of patterns that contributed; windows
    skipped for containing non-finite values are counted in
    ``n_skipped``.  ``counts`` carries the exact integer histogram when
    the distribution came from counting (``None`` for hand-built
    vectors).
    """

    probs: np.ndarray
    n_states: int
    n_windows: int
    counts: np.ndarray | None = None
    n_skipped: int = 0

    def __post_init__(self) -> None:
        probs = np.array(self.probs, dtype=float)  # copy: caller-held references must not mutate us
        probs.flags.writeable = False
        object.__setattr__(self, "probs", probs)
        if probs.ndim != 1 or probs.size != self.n_states:
            raise InvalidPdfError(
                f"probability vector has {probs.size} entries, expected {self.n_states}"
            )
        if not np.isfinite(probs).all() or (probs < 0.0).any() or (probs > 1.0).any():
            raise InvalidPdfError("probabilities must be finite and lie in [0, 1]")
        if self.n_windows > 0 and abs(float(probs.sum()) - 1.0) > SUM_TOL:
            raise InvalidPdfError(f"probabilities sum to {probs.sum()!r}, not 1")
        if self.counts is not None:
            counts = np.array(self.counts, dtype=np.int64)
            counts.flags.writeable = False
            object.__setattr__(self, "counts", counts)
            if counts.shape != probs.shape or (counts < 0).any():
                raise InvalidPdfError("counts must be non-negative and match probs")
            if int(counts.sum()) != self.n_windows:
                raise InvalidPdfError("counts do not sum to n_windows")

    @classmethod
    def from_probs(cls, values) -> "OrdinalPdf":
        """Wrap an explicit probability vector (no counting provenance)."""
        probs = np.asarray(values, dtype=float)
        if probs.ndim != 1 or probs.size < 2:
            raise InvalidPdfError("need a 1-D probability vector with at least two states")
        if not np.isfinite(probs).all() or abs(float(probs.sum()) - 1.0) > 1e-9:
            raise InvalidPdfError(f"probabilities sum to {probs.sum()!r}, not 1")
        return cls(probs=probs, n_states=probs.size, n_windows=0)


def estimate_pdf(series, params: EmbeddingParams) -> OrdinalPdf:
    """Relative frequency of each ordinal pattern in ``series``.

    Every admissible window contributes one count; windows containing a
    non-finite value are skipped and the denominator shrinks with them.
    Warns (:class:`ShortSeriesWarning`) when the series is shorter than
    ``10 * D!``, where pattern statistics get unreliable.
    """
    arr = np.asarray(series, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError("series must be one-dimensional")
    if arr.size < params.span:
        raise InsufficientDataError(
            f"need at least {params.span} samples for one pattern, got {arr.size}"
        )
    _warn_if_short(arr.size, params)
    return _pdf_from_codes(_pattern_codes(arr, params), params.n_states)


def _warn_if_short(n_samples: int, params: EmbeddingParams) -> None:
    limit = params.n_states * SHORT_SERIES_FACTOR
    if n_samples < limit:
        warnings.warn(
            f"{n_samples} samples is short for {params.n_states} ordinal states "
            f"(want at least {limit}); pattern frequencies will be noisy",
            ShortSeriesWarning,
            stacklevel=3,
        )


def _pdf_from_codes(codes: np.ndarray, n_states: int) -> OrdinalPdf:
    valid = codes >= 0
    n_windows = int(valid.sum())
    if n_windows == 0:
        raise InsufficientDataError("every pattern window contains non-finite values")
    counts = np.bincount(codes[valid], minlength=n_states)
    return OrdinalPdf(
        probs=counts / n_windows,
        n_states=n_states,
        n_windows=n_windows,
        counts=counts,
        n_skipped=int(codes.size - n_windows),
    )
