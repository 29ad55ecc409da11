"""Seeded reference-signal generators used as pipeline oracles.

All stochastic generators draw from ``numpy.random.default_rng`` (PCG64
bit generator), so a (kind, length, seed, params) tuple pins the output
stream exactly.  The logistic map is deterministic and ignores the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

KINDS = ("white_noise", "random_walk", "fgn", "logistic_map")


@dataclass(frozen=True)
class GeneratorConfig:
    """Declarative description of one reference signal."""

    kind: str
    length: int
    seed: int = 0
    hurst: float | None = None
    r: float = 4.0
    x0: float = 0.3

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown generator kind {self.kind!r}")
        if self.length < 1:
            raise InvalidParameterError(f"length must be >= 1, got {self.length!r}")
        if self.kind == "fgn":
            if self.hurst is None or not 0.0 < self.hurst < 1.0:
                raise InvalidParameterError(f"fgn needs hurst in (0, 1), got {self.hurst!r}")
        if not 0.0 < self.r <= 4.0:
            raise InvalidParameterError(f"logistic parameter r must be in (0, 4], got {self.r!r}")
        if not 0.0 < self.x0 < 1.0:
            raise InvalidParameterError(f"initial state x0 must be in (0, 1), got {self.x0!r}")


def generate(config: GeneratorConfig) -> np.ndarray:
    """Materialize the series described by ``config``."""
    if config.kind == "white_noise":
        return white_noise(config.length, config.seed)
    if config.kind == "random_walk":
        return random_walk(config.length, config.seed)
    if config.kind == "fgn":
        return fgn(config.length, config.hurst, config.seed)
    return logistic_map(config.length, config.r, config.x0)


def white_noise(n: int, seed: int) -> np.ndarray:
    """n i.i.d. standard Gaussian values."""
    if n < 0:
        raise InvalidParameterError(f"length must be >= 0, got {n!r}")
    return np.random.default_rng(seed).standard_normal(n)


def random_walk(n: int, seed: int) -> np.ndarray:
    """Cumulative sum of ``white_noise(n, seed)``."""
    return np.cumsum(white_noise(n, seed))


def fgn_autocovariance(hurst: float, k) -> np.ndarray:
    """Autocovariance of fractional Gaussian noise at integer lag(s) k."""
    k = np.abs(np.asarray(k, dtype=float))
    h2 = 2.0 * hurst
    return 0.5 * ((k + 1.0) ** h2 - 2.0 * k**h2 + np.abs(k - 1.0) ** h2)


def fgn(n: int, hurst: float, seed: int) -> np.ndarray:
    """Fractional Gaussian noise via the Hosking recursion.

    Exact conditional sampling: each value is drawn from its Gaussian
    distribution given the full past, with coefficients updated by the
    Durbin-Levinson recursion on the fGn autocovariance.  O(n^2) time,
    which is fine at oracle scale and trades speed for exactness.  At
    hurst = 0.5 the autocovariance vanishes for all positive lags and
    the output equals ``white_noise(n, seed)`` bit for bit.

    Parameters
    ----------
    n : int
        Series length, >= 0.
    hurst : float
        Hurst exponent, strictly inside (0, 1).
    seed : int
        RNG seed.
    """
    if not 0.0 < hurst < 1.0:
        raise InvalidParameterError(f"hurst must lie in (0, 1), got {hurst!r}")
    if n < 0:
        raise InvalidParameterError(f"length must be >= 0, got {n!r}")
    innovations = np.random.default_rng(seed).standard_normal(n)
    if n == 0:
        return innovations
    gamma = fgn_autocovariance(hurst, np.arange(n))  # gamma[0] = 1
    out = np.empty(n)
    out[0] = innovations[0]
    phi = np.zeros(n - 1)  # phi[j-1] = coefficient of the j-th most recent value
    variance = 1.0
    for t in range(1, n):
        if t == 1:
            reflection = gamma[1]
        else:
            reflection = (gamma[t] - phi[: t - 1] @ gamma[t - 1:0:-1]) / variance
        phi[: t - 1] -= reflection * phi[: t - 1][::-1]
        phi[t - 1] = reflection
        variance *= 1.0 - reflection * reflection
        out[t] = phi[:t] @ out[t - 1 :: -1] + np.sqrt(variance) * innovations[t]
    return out


def logistic_map(n: int, r: float = 4.0, x0: float = 0.3) -> np.ndarray:
    """Orbit of the map x_{k+1} = r * x_k * (1 - x_k), starting at x0."""
    if not 0.0 < r <= 4.0:
        raise InvalidParameterError(f"r must be in (0, 4], got {r!r}")
    if not 0.0 < x0 < 1.0:
        raise InvalidParameterError(f"x0 must be in (0, 1), got {x0!r}")
    if n < 0:
        raise InvalidParameterError(f"length must be >= 0, got {n!r}")
    out = np.empty(n)
    x = x0
    for k in range(n):
        out[k] = x
        x = r * x * (1.0 - x)
    return out
