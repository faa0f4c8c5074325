"""Gain/offset Gaussian channel with reproducible counter-based noise.

A transmitted word x is received as  gain * (x + noise) + offset * 1,
where the noise entries are i.i.d. normal with standard deviation
noise_sigma. Noise is drawn from a Philox counter-based generator keyed on
(seed, trial): a trial's output never depends on how many other trials ran
before it or on which thread ran it, so simulations are bit-reproducible
under any execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import as_word

__all__ = ["ChannelModel", "noise_vector", "transmit", "snr_db_to_sigma", "sigma_to_snr_db"]

_UINT64_MAX = 2**64 - 1


def _check_uint64(value: int, name: str) -> int:
    value = int(value)
    if not 0 <= value <= _UINT64_MAX:
        raise ValueError(f"{name} must fit in an unsigned 64-bit integer, got {value}")
    return value


@dataclass(frozen=True)
class ChannelModel:
    """Fixed channel parameters: positive gain, offset, noise level, RNG seed."""

    gain: float
    offset: float
    noise_sigma: float
    seed: int = 0

    def __post_init__(self):
        if not self.gain > 0:
            raise ValueError(f"gain must be positive, got {self.gain}")
        if self.noise_sigma < 0:
            raise ValueError(f"noise_sigma must be nonnegative, got {self.noise_sigma}")
        _check_uint64(self.seed, "seed")


def noise_vector(seed: int, trial: int, n: int) -> np.ndarray:
    """Standard normal draws for one trial, reproducible across runs and threads.

    Entry i is the i-th normal of the Philox stream keyed on (seed, trial).
    Distinct trials use distinct keys and are statistically independent.
    """
    key = np.array(
        [_check_uint64(seed, "seed"), _check_uint64(trial, "trial")], dtype=np.uint64
    )
    return np.random.Generator(np.random.Philox(key=key)).standard_normal(n)


def transmit(ch: ChannelModel, x, trial: int) -> np.ndarray:
    """Send word x through the channel for the given trial index.

    Returns gain * (x + noise) + offset * 1. With noise_sigma = 0 the output
    is the exact affine image of x (no generator draw is consumed).
    """
    w = as_word(x)
    if ch.noise_sigma > 0:
        w = w + ch.noise_sigma * noise_vector(ch.seed, trial, w.size)
    return ch.gain * w + ch.offset


def snr_db_to_sigma(snr_db: float) -> float:
    """Noise level for a signal-to-noise ratio given as -20*log10(sigma)."""
    return 10.0 ** (-float(snr_db) / 20.0)


def sigma_to_snr_db(sigma: float) -> float:
    """Inverse of snr_db_to_sigma; requires sigma > 0."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return -20.0 * math.log10(sigma)
