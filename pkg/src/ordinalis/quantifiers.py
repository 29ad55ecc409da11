"""Entropy, Fisher information and efficiency index of an ordinal PDF.

All three quantifiers are dimensionless and bounded:

* ``shannon_entropy``: -sum(p_i ln p_i) / ln N, a global disorder
  measure in [0, 1] (1 at the uniform distribution, 0 at a delta).
* ``fisher_information``: F0 * sum((sqrt(p_{i+1}) - sqrt(p_i))^2) over
  adjacent states in lexicographic order, a local gradient measure in
  [0, 1].  F0 is 1 for a delta sitting on the first or last state and
  1/2 otherwise, which pins the delta value at exactly 1.
* ``efficiency_index``: entropy minus Fisher information, in [-1, 1];
  +1 is maximally random, -1 maximally ordered.

Fisher information depends on the traversal order of the states (the
whole point of fixing the lexicographic indexing); entropy does not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, InvalidPdfError
from .pdf import OrdinalPdf

#: Tolerance on |sum(p) - 1| before a vector is rejected as unnormalized.
NORMALIZATION_TOL = 1e-9

# Slack for round-off when checking [0, 1] bounds of computed quantifiers.
_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class QuantifierPoint:
    """(entropy, fisher, efficiency) for one distribution or window."""

    entropy: float
    fisher: float
    efficiency: float

    def __post_init__(self) -> None:
        for name, value in (("entropy", self.entropy), ("fisher", self.fisher)):
            if not math.isfinite(value) or not -_RANGE_TOL <= value <= 1.0 + _RANGE_TOL:
                raise InvalidInputError(f"{name} must lie in [0, 1], got {value!r}")
        if abs(self.efficiency - (self.entropy - self.fisher)) > 1e-12:
            raise InvalidInputError("efficiency must equal entropy - fisher")


def _as_probs(pdf) -> np.ndarray:
    probs = pdf.probs if isinstance(pdf, OrdinalPdf) else np.asarray(pdf, dtype=float)
    if probs.ndim != 1 or probs.size < 2:
        raise InvalidPdfError("need a 1-D probability vector with at least two states")
    if not np.isfinite(probs).all() or (probs < 0.0).any():
        raise InvalidPdfError("probabilities must be finite and non-negative")
    total = float(probs.sum())
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise InvalidPdfError(f"probabilities sum to {total!r}, not 1")
    return probs


def shannon_entropy(pdf) -> float:
    """Normalized Shannon entropy of a probability vector.

    Zero-probability states contribute nothing (0 ln 0 := 0 by
    continuity), so delta distributions from monotone windows are fine.
    """
    probs = _as_probs(pdf)
    positive = probs[probs > 0.0]
    return float(-(positive * np.log(positive)).sum() / math.log(probs.size)) + 0.0


def fisher_information(pdf) -> float:
    """Normalized discrete Fisher information of a probability vector.

    Entries are traversed strictly in lexicographic state order; the
    amplitude form (differences of square roots) needs no division, so
    exact zeros are handled without any epsilon floor.
    """
    probs = _as_probs(pdf)
    amplitudes = np.sqrt(probs)
    return fisher_normalization(pdf, probs) * float(np.square(np.diff(amplitudes)).sum())


def fisher_normalization(pdf, probs: np.ndarray | None = None) -> float:
    """Normalization constant: 1 for a delta on the first or last state, else 1/2.

    When the distribution carries exact counts the delta test compares
    integers; otherwise it compares floats exactly (no threshold).
    """
    if probs is None:
        probs = _as_probs(pdf)
    if isinstance(pdf, OrdinalPdf) and pdf.counts is not None and pdf.n_windows > 0:
        edge_delta = (
            pdf.counts[0] == pdf.n_windows or pdf.counts[-1] == pdf.n_windows
        )
    else:
        edge_delta = (probs[0] == 1.0 and not probs[1:].any()) or (
            probs[-1] == 1.0 and not probs[:-1].any()
        )
    return 1.0 if edge_delta else 0.5


def efficiency_index(entropy: float, fisher: float) -> float:
    """Efficiency index: entropy minus Fisher information, in [-1, 1]."""
    for name, value in (("entropy", entropy), ("fisher", fisher)):
        if not math.isfinite(value) or not -_RANGE_TOL <= value <= 1.0 + _RANGE_TOL:
            raise InvalidInputError(f"{name} must lie in [0, 1], got {value!r}")
    return entropy - fisher


def quantify(pdf) -> QuantifierPoint:
    """Evaluate all three quantifiers on one distribution."""
    entropy = shannon_entropy(pdf)
    fisher = fisher_information(pdf)
    return QuantifierPoint(entropy, fisher, efficiency_index(entropy, fisher))
