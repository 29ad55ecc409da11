"""Ordinal pattern extraction and lexicographic pattern indexing.

A window of D values (tau-spaced samples, given oldest to newest) is
symbolized by the permutation of its sample lags that sorts the window
by value.  Lag 0 is the newest sample, lag D-1 the oldest, and the
permutation is read largest value first.  Exact ties are resolved
deterministically: among equal values the older sample (larger lag)
counts as the larger one, so a constant window maps to the same pattern
as a strictly falling one.

Every pattern is identified by the lexicographic rank of its lag tuple
among all D! permutations of (0, ..., D-1), computed via the factorial
number system (Lehmer code).  Probability vectors elsewhere in the
package are indexed by this rank, so state order is fixed and
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import (
    DimensionMismatchError,
    InsufficientDataError,
    InvalidInputError,
    InvalidParameterError,
    InvalidPermutationError,
)

#: Largest supported embedding dimension; 12! states is already impractical.
MAX_DIMENSION = 12

# Windows per block when vectorising long series, keeps the pairwise
# comparison tensors small.
_BLOCK = 1 << 16


@dataclass(frozen=True)
class EmbeddingParams:
    """Pattern length (``dimension``) and sample spacing (``delay``)."""

    dimension: int
    delay: int = 1

    def __post_init__(self) -> None:
        for name in ("dimension", "delay"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)):
                raise InvalidParameterError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if not 2 <= self.dimension <= MAX_DIMENSION:
            raise InvalidParameterError(
                f"dimension must lie in [2, {MAX_DIMENSION}], got {self.dimension!r}"
            )
        if self.delay < 1:
            raise InvalidParameterError(f"delay must be positive, got {self.delay!r}")

    @property
    def n_states(self) -> int:
        """Number of distinct patterns, dimension factorial."""
        return factorial(self.dimension)

    @property
    def span(self) -> int:
        """Number of raw samples covered by a single pattern window."""
        return (self.dimension - 1) * self.delay + 1


@dataclass(frozen=True)
class OrdinalPattern:
    """A lag permutation together with its lexicographic rank."""

    ranks: tuple[int, ...]
    lex_index: int

    def __post_init__(self) -> None:
        if lehmer_index(self.ranks) != self.lex_index:
            raise InvalidPermutationError(
                f"lex_index {self.lex_index} does not match ranks {self.ranks!r}"
            )

    @property
    def dimension(self) -> int:
        return len(self.ranks)


def lehmer_index(ranks) -> int:
    """Lexicographic rank of a permutation of (0, ..., D-1).

    Uses the factorial number system: digit i is the number of later
    entries smaller than entry i, weighted by (D-1-i)!.
    """
    ranks = tuple(int(r) for r in ranks)
    d = len(ranks)
    if d == 0 or sorted(ranks) != list(range(d)):
        raise InvalidPermutationError(f"not a permutation of 0..{d - 1}: {ranks!r}")
    index = 0
    for i, r in enumerate(ranks):
        smaller_later = sum(1 for s in ranks[i + 1:] if s < r)
        index += smaller_later * factorial(d - 1 - i)
    return index


def extract_pattern(window, params: EmbeddingParams) -> OrdinalPattern:
    """Ordinal pattern of one value window.

    Parameters
    ----------
    window : sequence of float
        Exactly ``params.dimension`` finite values, oldest to newest.
        The samples are assumed to be ``params.delay`` steps apart; the
        delay does not enter the extraction itself.
    params : EmbeddingParams
        Embedding configuration.

    Returns
    -------
    OrdinalPattern
        Lag permutation (largest value first) and its lexicographic rank.
    """
    arr = np.asarray(window, dtype=float)
    if arr.ndim != 1 or arr.size != params.dimension:
        raise DimensionMismatchError(
            f"window has {arr.size} values, embedding dimension is {params.dimension}"
        )
    if not np.isfinite(arr).all():
        raise InvalidInputError("window contains non-finite values")
    ranks = _ranks_of(arr.tolist())
    return OrdinalPattern(ranks=ranks, lex_index=lehmer_index(ranks))


def _ranks_of(window: list[float]) -> tuple[int, ...]:
    # Lag ell indexes backwards from the newest sample.
    by_lag = window[::-1]
    d = len(by_lag)
    ascending = sorted(range(d), key=lambda lag: (by_lag[lag], lag))
    return tuple(reversed(ascending))


def pattern_sequence(series, params: EmbeddingParams) -> np.ndarray:
    """Lexicographic pattern index at every admissible anchor time.

    Parameters
    ----------
    series : sequence of float
        At least ``params.span`` finite values in temporal order.
    params : EmbeddingParams

    Returns
    -------
    ndarray of int64
        One index per anchor, length ``len(series) - (D-1)*delay``, in
        temporal order.
    """
    arr = np.asarray(series, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError("series must be one-dimensional")
    if arr.size < params.span:
        raise InsufficientDataError(
            f"need at least {params.span} samples for one pattern, got {arr.size}"
        )
    if not np.isfinite(arr).all():
        raise InvalidInputError("series contains non-finite values")
    return _pattern_codes(arr, params)


def _pattern_codes(series: np.ndarray, params: EmbeddingParams) -> np.ndarray:
    """Pattern index per anchor; -1 marks windows touching non-finite values.

    Vectorised restatement of :func:`extract_pattern` + :func:`lehmer_index`:
    for the value at lag ``a``, its position in the largest-first ordering is
    the number of lags ranked above it, and its Lehmer digit is the number of
    numerically smaller lags whose value does not exceed it (the tie rule
    makes smaller lags compare as smaller on equality).
    """
    d, tau = params.dimension, params.delay
    n_pat = series.size - (d - 1) * tau
    if n_pat < 1:
        raise InsufficientDataError(
            f"need at least {params.span} samples for one pattern, got {series.size}"
        )
    lags = np.arange(d)
    facts = np.array([factorial(k) for k in range(d)], dtype=np.int64)
    codes = np.empty(n_pat, dtype=np.int64)
    for lo in range(0, n_pat, _BLOCK):
        hi = min(lo + _BLOCK, n_pat)
        anchors = np.arange(lo, hi) + (d - 1) * tau
        win = series[anchors[:, None] - lags[None, :] * tau]  # column ell = value at lag ell
        va, vb = win[:, :, None], win[:, None, :]
        la, lb = lags[None, :, None], lags[None, None, :]
        above = (vb > va) | ((vb == va) & (lb > la))
        pos = above.sum(axis=2)
        digit = ((vb <= va) & (lb < la)).sum(axis=2)
        block = (digit * facts[d - 1 - pos]).sum(axis=1)
        valid = np.isfinite(win).all(axis=1)
        codes[lo:hi] = np.where(valid, block, -1)
    return codes
